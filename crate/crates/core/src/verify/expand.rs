//! Canonical text for iota-divided powers and their coproducts.

use std::fmt;
use std::str::FromStr;

use super::check_ceiling;
use crate::error::{nonneg, Error, Result};
use crate::idp::{assemble_comult, comult_closed, comult_direct, comult_fhy, idp_closed, idp_pbw, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// A polynomial in `B`.
    B,
    /// PBW normal form in `U_q(sl2)`.
    Pbw,
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Basis::B),
            "pbw" => Ok(Basis::Pbw),
            _ => Err(Error::Parse(format!("unknown basis `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComultForm {
    /// `sum_r B^(n-r) (x) S_{n,r}` from the closed formula.
    Theorem,
    /// The same with `S_{n,r}` in reversed order.
    Fhy,
    /// The coproduct applied to the PBW image.
    Direct,
}

impl FromStr for ComultForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem" => Ok(ComultForm::Theorem),
            "fhy" => Ok(ComultForm::Fhy),
            "direct" => Ok(ComultForm::Direct),
            _ => Err(Error::Parse(format!("unknown form `{s}`"))),
        }
    }
}

impl fmt::Display for ComultForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComultForm::Theorem => "theorem",
            ComultForm::Fhy => "fhy",
            ComultForm::Direct => "direct",
        })
    }
}

pub fn expand_idp(p: Parity, n: i32, basis: Basis) -> Result<String> {
    let n = nonneg(n)?;
    check_ceiling(n as i64)?;
    Ok(match basis {
        Basis::B => idp_closed(p, n as i32)?.to_string(),
        Basis::Pbw => idp_pbw(p, n).to_string(),
    })
}

pub fn expand_comult(p: Parity, n: i32, form: ComultForm) -> Result<String> {
    let n = nonneg(n)?;
    check_ceiling(n as i64)?;
    let t = match form {
        ComultForm::Theorem => assemble_comult(p, n, &comult_closed(p, n as i32)?),
        ComultForm::Fhy => assemble_comult(p, n, &comult_fhy(p, n as i32)?),
        ComultForm::Direct => comult_direct(p, n as i32)?,
    };
    Ok(t.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idp_text() {
        assert_eq!(expand_idp(Parity::Ev, 0, Basis::Pbw).unwrap(), "1");
        assert_eq!(expand_idp(Parity::Ev, 1, Basis::B).unwrap(), "B");
        assert!(expand_idp(Parity::Odd, -1, Basis::B).is_err());
    }

    #[test]
    fn comult_forms_agree() {
        assert_eq!(expand_comult(Parity::Ev, 0, ComultForm::Theorem).unwrap(), "1⊗1");
        let forms = [ComultForm::Theorem, ComultForm::Fhy, ComultForm::Direct];
        let texts: Vec<_> = forms
            .iter()
            .map(|f| expand_comult(Parity::Odd, 3, *f).unwrap())
            .collect();
        assert_eq!(texts[0], texts[2]);
        assert_eq!(texts[1], texts[2]);
    }
}
