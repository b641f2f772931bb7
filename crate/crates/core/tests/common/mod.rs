//! Displayed worked examples, transcribed by hand, and the golden-file renderer.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use iquantum_core::idp::{assemble_comult, comult_closed, idp_pbw, mult_closed};
use iquantum_core::pbw::{h_binom, DividedGen, Generator};
use iquantum_core::qcomb::{qbinom, qint};
use iquantum_core::{Parity, Scalar, TensorElement, UElement};

pub fn qi(n: i32) -> Scalar {
    Scalar::from_poly(qint(n))
}

pub fn qb(m: i32, n: i32) -> Scalar {
    Scalar::from_poly(qbinom(m, n))
}

pub fn qv(k: u32) -> Scalar {
    Scalar::qv_power(k)
}

fn fact(n: i32) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, i| &acc * &qi(i))
}

fn prod(xs: &[i32]) -> Scalar {
    xs.iter().fold(Scalar::one(), |acc, &x| &acc * &qi(x))
}

fn ratio(num: &[i32], den: &[i32]) -> Scalar {
    &prod(num) * &prod(den).inv().unwrap()
}

/// `(m, n, {degree: coefficient})` for every displayed product at parameter `a`, zero terms dropped.
pub fn displayed_products(p: Parity, a: i32) -> Vec<(i32, i32, BTreeMap<u32, Scalar>)> {
    let t = |pairs: Vec<(i32, Scalar)>| -> BTreeMap<u32, Scalar> {
        pairs
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d as u32, c))
            .collect()
    };
    match p {
        Parity::Ev => vec![
            (
                2,
                2 * a - 1,
                t(vec![
                    (2 * a + 1, qb(2 * a + 1, 2)),
                    (2 * a - 1, &ratio(&[2 * a, 2 * a], &[2]) * &qv(1)),
                ]),
            ),
            (
                2,
                2 * a,
                t(vec![
                    (2 * a + 2, qb(2 * a + 2, 2)),
                    (2 * a, &ratio(&[2 * a, 2 * a], &[2]) * &qv(1)),
                ]),
            ),
            (
                3,
                2 * a - 1,
                t(vec![
                    (2 * a + 2, qb(2 * a + 2, 3)),
                    (
                        2 * a,
                        &(&prod(&[2 * a + 2, 2 * a, 2 * a - 2]) * &fact(3).inv().unwrap()) * &qv(1),
                    ),
                ]),
            ),
            (
                3,
                2 * a,
                t(vec![
                    (2 * a + 3, qb(2 * a + 3, 3)),
                    (2 * a + 1, &(&ratio(&[4], &[2]) * &qb(2 * a + 2, 3)) * &qv(1)),
                    (
                        2 * a - 1,
                        &(&prod(&[2 * a + 2, 2 * a, 2 * a - 2]) * &fact(3).inv().unwrap()) * &qv(2),
                    ),
                ]),
            ),
            (
                4,
                2 * a - 1,
                t(vec![
                    (2 * a + 3, qb(2 * a + 3, 4)),
                    (
                        2 * a + 1,
                        &ratio(&[2 * a + 2, 2 * a + 1, 2 * a, 2 * a], &[3, 2, 2]) * &qv(1),
                    ),
                    (
                        2 * a - 1,
                        &(&prod(&[2 * a + 2, 2 * a, 2 * a, 2 * a - 2]) * &fact(4).inv().unwrap()) * &qv(2),
                    ),
                ]),
            ),
            (
                4,
                2 * a,
                t(vec![
                    (2 * a + 4, qb(2 * a + 4, 4)),
                    (
                        2 * a + 2,
                        &ratio(&[2 * a + 2, 2 * a + 2, 2 * a + 1, 2 * a], &[3, 2, 2]) * &qv(1),
                    ),
                    (
                        2 * a,
                        &(&prod(&[2 * a + 2, 2 * a, 2 * a, 2 * a - 2]) * &fact(4).inv().unwrap()) * &qv(2),
                    ),
                ]),
            ),
        ],
        Parity::Odd => vec![
            (
                2,
                2 * a,
                t(vec![
                    (2 * a + 2, qb(2 * a + 2, 2)),
                    (2 * a, &ratio(&[2 * a + 2, 2 * a], &[2]) * &qv(1)),
                ]),
            ),
            (
                2,
                2 * a + 1,
                t(vec![
                    (2 * a + 3, qb(2 * a + 3, 2)),
                    (2 * a + 1, &ratio(&[2 * a + 2, 2 * a], &[2]) * &qv(1)),
                ]),
            ),
            (
                3,
                2 * a,
                t(vec![
                    (2 * a + 3, qb(2 * a + 3, 3)),
                    (2 * a + 1, &qb(2 * a + 2, 3) * &qv(1)),
                ]),
            ),
            (
                3,
                2 * a + 1,
                t(vec![
                    (2 * a + 4, qb(2 * a + 4, 3)),
                    (
                        2 * a + 2,
                        &(&(&prod(&[2 * a + 2, 2 * a + 2, 2 * a]) + &prod(&[2 * a + 3, 2 * a + 3, 2 * a + 2]))
                            * &fact(3).inv().unwrap())
                            * &qv(1),
                    ),
                    (2 * a, &qb(2 * a + 2, 3) * &qv(2)),
                ]),
            ),
            (
                4,
                2 * a,
                t(vec![
                    (2 * a + 4, qb(2 * a + 4, 4)),
                    (2 * a + 2, &(&ratio(&[2 * a + 4], &[2]) * &qb(2 * a + 2, 3)) * &qv(1)),
                    (
                        2 * a,
                        &(&prod(&[2 * a + 4, 2 * a + 2, 2 * a, 2 * a - 2]) * &fact(4).inv().unwrap()) * &qv(2),
                    ),
                ]),
            ),
            (
                4,
                2 * a + 1,
                t(vec![
                    (2 * a + 5, qb(2 * a + 5, 4)),
                    (2 * a + 3, &(&ratio(&[2 * a], &[2]) * &qb(2 * a + 4, 3)) * &qv(1)),
                    (
                        2 * a + 1,
                        &(&prod(&[2 * a + 4, 2 * a + 2, 2 * a, 2 * a - 2]) * &fact(4).inv().unwrap()) * &qv(2),
                    ),
                ]),
            ),
        ],
    }
}

fn g(x: Generator) -> UElement {
    UElement::gen(x)
}

fn ec(n: i32) -> UElement {
    UElement::divided_power(DividedGen::Echeck, n).unwrap()
}

fn fd(n: i32) -> UElement {
    UElement::divided_power(DividedGen::F, n).unwrap()
}

fn k(n: i32) -> UElement {
    UElement::k_pow(n)
}

fn sum(xs: Vec<UElement>) -> UElement {
    xs.iter().fold(UElement::zero(), |acc, x| &acc + x)
}

fn sc(x: UElement, c: Scalar) -> UElement {
    x.scale(&c)
}

fn q(i: i32) -> Scalar {
    Scalar::q_pow(i)
}

/// The displayed coproducts of `B^(2)` and `B^(3)`, built term by term.
pub fn displayed_coproduct(p: Parity, n: u32) -> TensorElement {
    let left = |j: u32| (*idp_pbw(p, j)).clone();
    let qvs = qv(1);
    let pair = TensorElement::from_pair;
    let f = g(Generator::F);
    let e1 = UElement::echeck();
    match n {
        2 => {
            let top = if p == Parity::Ev { 1 } else { 3 };
            let r1 = sum(vec![sc(&e1 * &k(-1), q(-1)), sc(&k(-1) * &f, q(-1))]);
            let r2 = sum(vec![
                ec(2),
                sc(&e1 * &f, q(-1)),
                fd(2),
                sc(h_binom(0, 1).unwrap(), &q(top) * &qvs),
            ]);
            &(&pair(&left(2), &k(-2)) + &pair(&left(1), &r1)) + &pair(&UElement::one(), &r2)
        }
        3 => {
            let (e2, shift3) = if p == Parity::Ev { (3, -1) } else { (1, 0) };
            let e3 = if p == Parity::Ev { 3 } else { 1 };
            let r1 = sum(vec![sc(&e1 * &k(-2), q(-2)), sc(&k(-2) * &f, q(-2))]);
            let r2 = sum(vec![
                sc(&ec(2) * &k(-1), q(-2)),
                sc(&(&e1 * &k(-1)) * &f, q(-3)),
                sc(&k(-1) * &fd(2), q(-2)),
                sc(&h_binom(0, 1).unwrap() * &k(-1), &q(e2) * &qvs),
            ]);
            let hb = h_binom(shift3, 1).unwrap();
            let r3 = sum(vec![
                ec(3),
                sc(&ec(2) * &f, q(-2)),
                sc(&e1 * &fd(2), q(-2)),
                fd(3),
                sc(&e1 * &hb, &q(e3) * &qvs),
                sc(&hb * &f, &q(e3) * &qvs),
            ]);
            &(&(&pair(&left(3), &k(-3)) + &pair(&left(2), &r1)) + &pair(&left(1), &r2)) + &pair(&UElement::one(), &r3)
        }
        _ => panic!("no displayed coproduct for n = {n}"),
    }
}

pub const GOLDEN: [(&str, Parity, bool); 4] = [
    ("mult_ev.txt", Parity::Ev, true),
    ("mult_odd.txt", Parity::Odd, true),
    ("comult_ev.txt", Parity::Ev, false),
    ("comult_odd.txt", Parity::Odd, false),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Golden text produced from the general formulas (not from the transcriptions above).
pub fn render_golden(p: Parity, mult: bool) -> String {
    let mut out = String::new();
    if mult {
        out.push_str(&format!(
            "# B^(m) B^(n) in family {p}, coefficients of B^(d) by descending d\n"
        ));
        for a in 1..=3 {
            for (m, n, _) in displayed_products(p, a) {
                let coeffs = mult_closed(p, m, n).unwrap();
                let terms: Vec<String> = coeffs.iter().rev().map(|(d, c)| format!("B^({d}): {c}")).collect();
                out.push_str(&format!("a={a} m={m} n={n} | {}\n", terms.join(" | ")));
            }
        }
    } else {
        out.push_str(&format!("# coproduct of B^(n) in family {p}, assembled from S_(n,r)\n"));
        for n in 2..=3u32 {
            let t = assemble_comult(p, n, &comult_closed(p, n as i32).unwrap());
            out.push_str(&format!("n={n} | {t}\n"));
        }
    }
    out
}
