use num_traits::Zero;
use proptest::prelude::*;

use positivity_core::gegenbauer::{
    dim_spherical_harmonics, gegenbauer, gegenbauer_via_generating_series,
    inner_product_normalized, normalized_moment, to_gegenbauer_basis, GegenbauerFamily,
};
use positivity_core::polycore::{int, rat, Poly, Rational};

#[test]
fn recurrence_matches_generating_series() {
    for n in 2..=24 {
        let series = gegenbauer_via_generating_series(n, 12).unwrap();
        for (k, c) in series.iter().enumerate() {
            let g = gegenbauer(n, k).unwrap();
            assert_eq!(c.scale(&(int(1) / c.eval(&int(1)))), g, "n={n}, k={k}");
        }
    }
}

#[test]
fn degree_value_at_one_and_parity() {
    let minus_t = Poly::from_ints(&[0, -1]);
    for n in 2..=16 {
        let family = GegenbauerFamily::new(n, 12).unwrap();
        for (k, g) in family.polys().iter().enumerate() {
            assert_eq!(g.degree(), Some(k));
            assert_eq!(g.eval(&int(1)), int(1));
            // G_k(-t) = (-1)^k G_k(t), compared by composition coefficientwise.
            let composed = g
                .coeffs()
                .iter()
                .enumerate()
                .fold(Poly::zero(), |acc, (j, c)| &acc + &minus_t.pow(j as u32).scale(c));
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(composed, g.scale(&sign));
        }
    }
}

#[test]
fn orthogonality_and_positive_norms() {
    for n in 2..=12 {
        let family = GegenbauerFamily::new(n, 10).unwrap();
        for j in 0..=10 {
            for k in 0..=10 {
                let ip = inner_product_normalized(n, family.get(j), family.get(k)).unwrap();
                if j == k {
                    assert!(ip > Rational::zero());
                } else {
                    assert!(ip.is_zero(), "n={n}: <G_{j}, G_{k}> = {ip}");
                }
            }
        }
    }
}

#[test]
fn legendre_norms() {
    // n = 3: the normalized measure is dt/2 on [-1, 1], so ⟨P_k, P_k⟩ = 1/(2k+1).
    let family = GegenbauerFamily::new(3, 8).unwrap();
    for k in 0..=8 {
        let ip = inner_product_normalized(3, family.get(k), family.get(k)).unwrap();
        assert_eq!(ip, rat(1, 2 * k as i64 + 1));
    }
}

#[test]
fn moments_of_the_plane_measure() {
    // n = 2: the weight (1-t²)^{-1/2} gives m_{2k} = binom(2k, k) / 4^k.
    let expected = [rat(1, 1), rat(1, 2), rat(3, 8), rat(5, 16), rat(35, 128)];
    for (k, m) in expected.iter().enumerate() {
        assert_eq!(&normalized_moment(2, 2 * k).unwrap(), m);
        assert!(normalized_moment(2, 2 * k + 1).unwrap().is_zero());
    }
}

#[test]
fn harmonic_dimensions_are_monotone() {
    for n in 3..=16u32 {
        let dims: Vec<_> = (0..20u64).map(|k| dim_spherical_harmonics(n, k).unwrap()).collect();
        assert!(dims.iter().all(|d| *d >= 1u32.into()));
        assert!(dims.windows(2).all(|w| w[0] <= w[1]), "n={n}");
    }
    // Summing N(n, k) for k <= d counts harmonic polynomials of degree <= d,
    // which for n = 3 is (d + 1)^2.
    for d in 0..12u64 {
        let total: u64 = (0..=d)
            .map(|k| u64::try_from(dim_spherical_harmonics(3, k).unwrap()).unwrap())
            .sum();
        assert_eq!(total, (d + 1) * (d + 1));
    }
}

proptest! {
    #[test]
    fn basis_round_trip(n in 2u32..25, coeffs in prop::collection::vec((-50i64..50, 1i64..20), 0..10)) {
        let p = Poly::new(coeffs.iter().map(|&(a, b)| rat(a, b)).collect());
        let c = to_gegenbauer_basis(n, &p).unwrap();
        prop_assert_eq!(c.expand().unwrap(), p.clone());
        prop_assert_eq!(c.coeffs.len(), p.degree().map_or(0, |d| d + 1));
        // c_0 is the mean of p against the measure.
        if let Some(c0) = c.coeffs.first() {
            prop_assert_eq!(c0, &inner_product_normalized(n, &p, &Poly::one()).unwrap());
        }
    }
}
