use heisenfock_core::partitions::multipartitions_of;
use heisenfock_core::rational::int;
use heisenfock_core::series::Series;
use heisenfock_core::{compare_dims, fock_dim, partitions_of, vistoli_dim, Rational};

// Coefficients of ∏_{n=1}^{L} (1 - q^n)^{-d}, built by repeated division by (1 - q^n).
fn product_series(d: usize, order: usize) -> Series {
    let mut acc = Series::one(order);
    for n in 1..=order {
        let mut geometric = Series::zero(order);
        for k in (0..=order).step_by(n) {
            geometric = &geometric + &Series::from_coeffs(
                (0..=order).map(|i| if i == k { int(1) } else { int(0) }).collect(),
                order,
            );
        }
        for _ in 0..d {
            acc = &acc * &geometric;
        }
    }
    acc
}

#[test]
fn three_routes_agree() {
    for d in 1..=4 {
        let series = product_series(d, 12);
        for level in 0..=12u32 {
            let fock = fock_dim(level, d);
            assert_eq!(fock, vistoli_dim(level, d), "d={d} level={level}");
            assert_eq!(Rational::from_integer((fock as i64).into()), *series.coeff(level as usize));
        }
    }
}

#[test]
fn enumeration_agrees_for_small_levels() {
    for d in 1..=3 {
        for level in 0..=7 {
            assert_eq!(multipartitions_of(level, d).len() as u64, fock_dim(level, d));
        }
    }
}

#[test]
fn partition_function_values() {
    let expected = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for (level, &p) in expected.iter().enumerate() {
        assert_eq!(fock_dim(level as u32, 1), p);
        assert_eq!(vistoli_dim(level as u32, 1), p);
        assert_eq!(partitions_of(level as u32).len() as u64, p);
    }
}

#[test]
fn parts_reading_of_the_decomposition_disagrees() {
    // Σ_ν ∏_parts dim S^{ν_j} ℚ^d, the other reading of the display
    let parts_reading = |level: u32, d: u64| -> u64 {
        partitions_of(level)
            .iter()
            .map(|nu| {
                nu.parts()
                    .iter()
                    .map(|&p| (0..p as u64).fold(1u64, |acc, j| acc * (d + j) / (j + 1)))
                    .product::<u64>()
            })
            .sum()
    };
    assert_eq!(parts_reading(2, 2), 3 + 4);
    assert_ne!(parts_reading(2, 2), fock_dim(2, 2));
}

#[test]
fn comparison_table() {
    let table = compare_dims(8, 3);
    assert!(table.all_equal());
    assert_eq!(table.rows.iter().map(|r| r.fock).collect::<Vec<_>>(), vec![1, 3, 9, 22, 51, 108, 221, 429, 810]);
}
