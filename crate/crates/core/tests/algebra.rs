use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use quotdt_core::series::macmahon;
use quotdt_core::{weight_form, EquivParams, LaurentPoly, Series};

fn poly(rank: usize) -> impl Strategy<Value = LaurentPoly> {
    let exp = prop::collection::vec(-2i64..=2, 3 + rank);
    prop::collection::vec((exp, -4i64..=4), 0..6)
        .prop_map(move |terms| LaurentPoly::from_terms(rank, terms).unwrap())
}

fn three_polys() -> impl Strategy<Value = (LaurentPoly, LaurentPoly, LaurentPoly)> {
    (0usize..=2).prop_flat_map(|r| (poly(r), poly(r), poly(r)))
}

fn params(rank: usize) -> impl Strategy<Value = EquivParams> {
    (prop::array::uniform3(-50i64..=50), prop::collection::vec(-50i64..=50, rank))
        .prop_map(|(s, v)| EquivParams::new(s, v))
}

fn unit_series() -> impl Strategy<Value = Series> {
    (prop::collection::vec(-5i64..=5, 0..6)).prop_map(|tail| {
        Series::from_integers(std::iter::once(1).chain(tail))
    })
}

proptest! {
    #[test]
    fn multiplication_is_commutative_and_associative((a, b, c) in three_polys()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn dual_is_an_involutive_ring_map((a, b, _) in three_polys()) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!((&a * &b).dual(), &a.dual() * &b.dual());
        prop_assert_eq!((&a + &b).dual(), &a.dual() + &b.dual());
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map((a, b, _) in three_polys()) {
        prop_assert_eq!((&a * &b).sum_of_coefficients(), a.sum_of_coefficients() * b.sum_of_coefficients());
        prop_assert_eq!((&a - &b).sum_of_coefficients(), a.sum_of_coefficients() - b.sum_of_coefficients());
        prop_assert_eq!(a.dual().sum_of_coefficients(), a.sum_of_coefficients());
    }

    #[test]
    fn weight_form_is_linear(
        e in prop::collection::vec(-9i64..=9, 5),
        f in prop::collection::vec(-9i64..=9, 5),
        p in params(2),
        k in -7i64..=7,
    ) {
        let sum: Vec<i64> = e.iter().zip(&f).map(|(x, y)| x + y).collect();
        prop_assert_eq!(weight_form(&sum, &p), weight_form(&e, &p) + weight_form(&f, &p));
        prop_assert_eq!(weight_form(&e, &p.scaled(k)), weight_form(&e, &p) * BigRational::from_integer(k.into()));
        let neg: Vec<i64> = e.iter().map(|x| -x).collect();
        prop_assert_eq!(weight_form(&neg, &p), -weight_form(&e, &p));
    }

    #[test]
    fn series_powers_compose(s in unit_series(), a in -4i64..=4, b in -4i64..=4) {
        prop_assert_eq!(s.pow(a).unwrap().pow(b).unwrap(), s.pow(a * b).unwrap());
        prop_assert_eq!(s.pow(a).unwrap().mul(&s.pow(-a).unwrap()), Series::one(s.order()));
    }

    #[test]
    fn sign_substitution_only_touches_odd_coefficients(n in 0usize..12) {
        let m = macmahon(n);
        let neg = m.negate_variable();
        for i in 0..=n {
            prop_assert!(m.coeff(i) > &BigRational::from_integer(BigInt::from(0)));
            let expected = if i % 2 == 1 { -m.coeff(i) } else { m.coeff(i).clone() };
            prop_assert_eq!(neg.coeff(i), &expected);
        }
    }
}
