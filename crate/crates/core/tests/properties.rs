use mirrorforge::exactnum::q;
use mirrorforge::loc::ZRational;
use mirrorforge::{CycScalar, LambdaPoly, QSeries, Rational};
use proptest::prelude::*;

const N: usize = 8;

fn rat() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..9).prop_map(|(n, d)| q(n, d))
}

fn series() -> impl Strategy<Value = QSeries> {
    proptest::collection::vec(rat(), N + 1).prop_map(|c| QSeries::new("t", N, c))
}

/// Series with constant term 1.
fn unit_series() -> impl Strategy<Value = QSeries> {
    series().prop_map(|s| {
        let mut c = s.coeffs().to_vec();
        c[0] = Rational::one();
        QSeries::new("t", N, c)
    })
}

fn cyc() -> impl Strategy<Value = CycScalar> {
    proptest::array::uniform4(rat()).prop_map(CycScalar::new)
}

proptest! {
    #[test]
    fn mul_is_associative_and_commutative(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn inverse_is_two_sided(a in unit_series()) {
        let inv = a.inv().unwrap();
        prop_assert_eq!(a.mul(&inv), QSeries::one("t", N));
    }

    #[test]
    fn exp_inverts_log(a in unit_series()) {
        prop_assert_eq!(a.log().unwrap().exp().unwrap(), a);
    }

    #[test]
    fn derivative_undoes_antiderivative(a in series()) {
        let back = a.antiderivative(Rational::zero()).derivative();
        prop_assert_eq!(back.truncate(N - 1), a.truncate(N - 1));
    }

    #[test]
    fn reversion_composes_to_identity(mut c in proptest::collection::vec(rat(), N + 1)) {
        c[0] = Rational::zero();
        c[1] = Rational::one();
        let f = QSeries::new("t", N, c);
        let g = f.reversion().unwrap();
        prop_assert_eq!(QSeries::compose(&f, &g).unwrap(), QSeries::variable("t", N));
    }

    #[test]
    fn rational_power_laws(a in unit_series(), n in 1i64..4, d in 1i64..4) {
        let r = q(n, d);
        let lhs = a.pow_rational(&r).unwrap().powi(d).unwrap();
        prop_assert_eq!(lhs, a.powi(n).unwrap());
    }

    #[test]
    fn cyclotomic_field_axioms(x in cyc(), y in cyc()) {
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        if !x.is_zero() {
            prop_assert_eq!(x.mul(&x.inv().unwrap()), CycScalar::from_int(1));
        }
        prop_assert_eq!(x.galois(1).norm(), x.norm());
    }

    #[test]
    fn zrational_residue_matches_partial_fraction(c in rat(), r in rat(), s in rat()) {
        prop_assume!(!r.is_zero() && !s.is_zero() && r != s && !c.is_zero());
        // c / ((z − r)(z − s)) has residue c/(r − s) at r
        let f = ZRational::new(vec![LambdaPoly::constant(c.clone())], 0, vec![r.clone(), s.clone()]);
        let want = &c * &(&r - &s).inv().unwrap();
        prop_assert_eq!(f.residue(&r).unwrap(), LambdaPoly::constant(want));
        let at = &r + &s;
        if at != r && at != s {
            let direct = &c * &(&(&at - &r) * &(&at - &s)).inv().unwrap();
            prop_assert_eq!(f.eval(&at).unwrap(), LambdaPoly::constant(direct));
        }
    }

    #[test]
    fn rational_display_roundtrip(x in rat()) {
        let back: Rational = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }
}
