//! Normal forms of `F^c E^a`, the only reordering the product ever needs.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::{Accumulator, PbwMonomial};
use crate::coeff::Scalar;
use crate::qcomb::qint;

type Table = HashMap<(u32, u32), Arc<Vec<(PbwMonomial, Scalar)>>>;

fn cache() -> &'static RwLock<Table> {
    static CACHE: OnceLock<RwLock<Table>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `F^c E^a` in PBW form.
pub(crate) fn fe_normal(c: u32, a: u32) -> Arc<Vec<(PbwMonomial, Scalar)>> {
    if let Some(hit) = cache().read().unwrap().get(&(c, a)) {
        return hit.clone();
    }
    let value = if a == 0 || c == 0 {
        vec![(PbwMonomial::new(a, 0, c), Scalar::one())]
    } else {
        right_mul_e(&fe_normal(c, a - 1))
    };
    let value = Arc::new(value);
    cache().write().unwrap().insert((c, a), value.clone());
    value
}

// E^x K^y F^z * E = q^{2y} E^{x+1} K^y F^z
//   - [z]/(q - q^-1) (q^{z-1} E^x K^{y+1} F^{z-1} - q^{1-z} E^x K^{y-1} F^{z-1})
fn right_mul_e(x: &[(PbwMonomial, Scalar)]) -> Vec<(PbwMonomial, Scalar)> {
    let inv = Scalar::from_poly("q - q^-1".parse().unwrap()).inv().unwrap();
    let mut acc = Accumulator::default();
    for (m, c) in x {
        acc.push(PbwMonomial::new(m.e + 1, m.k, m.f), c.mul_q_pow(2 * m.k));
        if m.f > 0 {
            let z = m.f as i32;
            let w = &(c * &inv) * &Scalar::from_poly(qint(z));
            acc.push(PbwMonomial::new(m.e, m.k + 1, m.f - 1), -w.mul_q_pow(z - 1));
            acc.push(PbwMonomial::new(m.e, m.k - 1, m.f - 1), w.mul_q_pow(1 - z));
        }
    }
    acc.finish().terms().map(|(m, c)| (*m, c.clone())).collect()
}
