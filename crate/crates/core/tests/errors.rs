//! Every error variant reached through the public API.

use iquantum_core::idp::{
    basis_expand_specialized, comult_closed, comult_direct, comult_fhy, idp_closed, idp_recursive, mult_closed,
};
use iquantum_core::pbw::{h_binom, DividedGen};
use iquantum_core::qcomb::{qfact, qint_base};
use iquantum_core::verify::{
    emit_table, expand_comult, expand_idp, run_suite, run_suite_named, Basis, ComultForm, Suite, TableFormat,
    VarsigmaMode, DEFAULT_CEILING,
};
use iquantum_core::{BPolynomial, Error, LaurentPoly, Parity, Scalar, UElement};

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn negative_inputs() {
    assert_eq!(qfact(-1).err(), Some(Error::NegativeInput(-1)));
    assert_eq!(
        UElement::divided_power(DividedGen::F, -1).err(),
        Some(Error::NegativeInput(-1))
    );
    assert_eq!(h_binom(0, -1).err(), Some(Error::NegativeInput(-1)));
    assert_eq!(idp_closed(Parity::Ev, -1).err(), Some(Error::NegativeInput(-1)));
    assert_eq!(idp_recursive(Parity::Odd, -1).err(), Some(Error::NegativeInput(-1)));
    assert_eq!(mult_closed(Parity::Ev, -1, 2).err(), Some(Error::NegativeInput(-1)));
    assert_eq!(mult_closed(Parity::Ev, 2, -1).err(), Some(Error::NegativeInput(-1)));
    assert_eq!(comult_closed(Parity::Odd, -1).err(), Some(Error::NegativeInput(-1)));
    assert_eq!(comult_fhy(Parity::Ev, -1).err(), Some(Error::NegativeInput(-1)));
    assert_eq!(comult_direct(Parity::Ev, -1).err(), Some(Error::NegativeInput(-1)));
    assert_eq!(
        expand_idp(Parity::Ev, -1, Basis::B).err(),
        Some(Error::NegativeInput(-1))
    );
    assert_eq!(
        expand_comult(Parity::Ev, -1, ComultForm::Direct).err(),
        Some(Error::NegativeInput(-1))
    );
}

#[test]
fn zero_base() {
    assert_eq!(qint_base(3, 0), Err(Error::ZeroBase));
}

#[test]
fn division_by_zero() {
    assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
    assert_eq!(
        Scalar::from_fraction(LaurentPoly::one(), LaurentPoly::zero()),
        Err(Error::DivisionByZero)
    );
    assert_eq!(Scalar::recip_qint(0), Err(Error::DivisionByZero));
}

#[test]
fn denominator_vanishes() {
    let x = Scalar::from_fraction(LaurentPoly::one(), lp("1 - q*v")).unwrap();
    assert_eq!(x.specialize_varsigma(), Err(Error::DenominatorVanishes));
    let ok = Scalar::from_fraction(LaurentPoly::one(), lp("1 + q*v")).unwrap();
    assert_eq!(
        ok.specialize_varsigma().unwrap(),
        Scalar::from_fraction(LaurentPoly::one(), lp("2")).unwrap()
    );
}

#[test]
fn requires_specialized() {
    assert_eq!(Scalar::varsigma().bar(), Err(Error::RequiresSpecialized));
    assert_eq!(UElement::b().chi(), Err(Error::RequiresSpecialized));
    let b = BPolynomial::b().scale(&Scalar::varsigma());
    assert_eq!(
        basis_expand_specialized(&b, Parity::Ev),
        Err(Error::RequiresSpecialized)
    );
}

#[test]
fn not_integral() {
    let x = Scalar::from_fraction(lp("q^2 + 1"), lp("q + 1")).unwrap();
    assert!(matches!(x.to_laurent(), Err(Error::NotIntegral(_))));
    let y = Scalar::from_fraction(lp("q^2 - q^-2"), lp("q - q^-1")).unwrap();
    assert_eq!(y.to_laurent().unwrap(), lp("q^-1 + q"));
}

#[test]
fn resource_limit() {
    let over = DEFAULT_CEILING as i32 + 1;
    let limit = |r| matches!(r, Err(Error::ResourceLimit { .. }));
    assert!(limit(
        run_suite(Suite::MultOdd, over as i64, VarsigmaMode::Generic).map(|_| ())
    ));
    assert!(limit(emit_table(Parity::Ev, over, TableFormat::Csv).map(|_| ())));
    assert!(limit(expand_idp(Parity::Ev, over, Basis::Pbw).map(|_| ())));
    assert!(limit(expand_comult(Parity::Odd, over, ComultForm::Theorem).map(|_| ())));
}

#[test]
fn unknown_suite_and_bad_bound() {
    assert_eq!(
        run_suite_named("mult", None, VarsigmaMode::Generic).map(|_| ()),
        Err(Error::UnknownSuite("mult".into()))
    );
    assert_eq!(
        run_suite(Suite::Chi, 0, VarsigmaMode::Generic).map(|_| ()),
        Err(Error::InvalidBound(0))
    );
}

#[test]
fn parse_errors() {
    assert!(matches!("q^".parse::<LaurentPoly>(), Err(Error::Parse(_))));
    assert!("(1)/(0)".parse::<Scalar>().is_err());
    assert!(matches!("bogus".parse::<VarsigmaMode>(), Err(Error::Parse(_))));
}

#[test]
fn error_messages() {
    assert_eq!(
        Error::NegativeInput(-3).to_string(),
        "negative input -3 where a nonnegative integer is required"
    );
    assert_eq!(Error::UnknownSuite("x".into()).to_string(), "unknown suite `x`");
    assert_eq!(
        Error::ResourceLimit {
            requested: 30,
            ceiling: 24
        }
        .to_string(),
        "bound 30 exceeds the resource ceiling 24"
    );
}
