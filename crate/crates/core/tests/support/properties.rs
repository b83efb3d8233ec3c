//! Randomized algebraic properties shared by the property test targets and
//! the acceptance harness. Each target uses a subset.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{TestCaseResult, TestRunner};
use superbialg::bialgebra::{check_cobracket, cybe_status, family, FamilyId};
use superbialg::cocycle_solver::linalg;
use superbialg::equivalence::{e2_automorphism, osp_rational, E2Generator};
use superbialg::superalgebra::{osp12, parameter_ring, super_e2};
use superbialg::superscalar::{int, rat, reduce_mod_relation, Parity, Rational, Relation, Ring, SuperScalar};

pub const SCALAR_CASES: u32 = 1000;
pub const TRANSFORM_CASES: u32 = 40;

pub type Property = (&'static str, u32, fn() -> Result<(), String>);

pub const ALL: &[Property] = &[
    ("canonical form uniqueness", SCALAR_CASES, canonical_form_is_unique),
    ("associativity and distributivity", SCALAR_CASES, multiplication_is_associative),
    ("supercommutativity", SCALAR_CASES, multiplication_is_supercommutative),
    ("reduce_mod_relation idempotence", SCALAR_CASES, reduction_is_idempotent),
    ("nullspace exactness", SCALAR_CASES, nullspace_vectors_are_exact),
    ("osp transform functoriality", TRANSFORM_CASES, osp_transform_is_functorial),
    ("super-e(2) transform functoriality", TRANSFORM_CASES, e2_transform_is_functorial),
];

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> TestCaseResult) -> Result<(), String> {
    let config = ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() };
    TestRunner::new(config).run(&strategy, test).map_err(|e| e.to_string())
}

fn ring() -> Ring {
    Ring::with_names(&["x", "y"], &["E"], &["t1", "t2", "t3"]).expect("distinct names")
}

/// A term as (numerator, denominator, exponents of x, y, E, t1, t2, t3).
type Term = (i64, i64, [i32; 6]);

fn term() -> impl Strategy<Value = Term> {
    (-4i64..=4, 1i64..=3, (0i32..3, 0i32..3, -2i32..3, 0i32..2, 0i32..2, 0i32..2))
        .prop_map(|(n, d, (a, b, e, p, q, r))| (n, d, [a, b, e, p, q, r]))
}

fn element() -> impl Strategy<Value = Vec<Term>> {
    prop::collection::vec(term(), 0..5)
}

/// Builds the sum of `terms`, multiplying variables and adding terms either
/// in the listed order or in reverse.
fn build(ring: &Ring, terms: &[Term], reverse: bool) -> SuperScalar {
    const NAMES: [&str; 6] = ["x", "y", "E", "t1", "t2", "t3"];
    let mono = |exps: &[i32; 6]| {
        let mut m = ring.one();
        let order: Vec<usize> = if reverse { (0..6).rev().collect() } else { (0..6).collect() };
        for i in order {
            m = &m * &ring.v(NAMES[i]).powi(exps[i]).expect("E is invertible");
        }
        // Reversing n odd factors costs n(n-1)/2 transpositions.
        let odd = exps[3..].iter().filter(|&&e| e > 0).count();
        if reverse && (odd * odd.saturating_sub(1) / 2) % 2 == 1 {
            -m
        } else {
            m
        }
    };
    let mut out = ring.zero();
    let ordered: Vec<&Term> = if reverse { terms.iter().rev().collect() } else { terms.iter().collect() };
    for (n, d, exps) in ordered {
        out = &out + &mono(exps).scale(&rat(*n, *d));
    }
    out
}

pub fn canonical_form_is_unique() -> Result<(), String> {
    run(SCALAR_CASES, element(), |ts| {
        let r = ring();
        let (a, b) = (build(&r, &ts, false), build(&r, &ts, true));
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert_eq!(r.parse(&a.to_string()).unwrap(), a);
        Ok(())
    })
}

pub fn multiplication_is_associative() -> Result<(), String> {
    run(SCALAR_CASES, (element(), element(), element()), |(x, y, z)| {
        let r = ring();
        let (a, b, c) = (build(&r, &x, false), build(&r, &y, false), build(&r, &z, false));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        Ok(())
    })
}

/// Homogeneous elements: an even element, optionally times an odd variable.
fn homogeneous() -> impl Strategy<Value = (bool, Vec<Term>)> {
    let even = prop::collection::vec(term(), 0..4).prop_map(|ts| {
        ts.into_iter()
            .map(|(n, d, mut e)| {
                if (e[3] + e[4] + e[5]) % 2 == 1 {
                    e[3] = 1 - e[3];
                }
                (n, d, e)
            })
            .collect()
    });
    (any::<bool>(), even)
}

pub fn multiplication_is_supercommutative() -> Result<(), String> {
    run(SCALAR_CASES, (homogeneous(), homogeneous()), |((p, x), (q, y))| {
        let r = ring();
        let make = |ts: &[Term], odd: bool| {
            let a = build(&r, ts, false);
            if odd {
                &a * &r.v("t3")
            } else {
                a
            }
        };
        let (a, b) = (make(&x, p), make(&y, q));
        if !a.is_zero() {
            prop_assert_eq!(a.parity(), Some(if p { Parity::Odd } else { Parity::Even }));
        }
        let sign = if p && q { -1 } else { 1 };
        prop_assert_eq!(&a * &b, (&b * &a).scale_int(sign));
        Ok(())
    })
}

pub fn reduction_is_idempotent() -> Result<(), String> {
    run(SCALAR_CASES, element(), |ts| {
        let r = Ring::with_names(&["a", "b", "c", "d"], &[], &["alpha", "delta"]).unwrap();
        let rel = Relation::parse(&r, "a*d - b*c + alpha*delta - 1", "a*d").unwrap();
        let names = ["a", "d", "b", "c", "alpha", "delta"];
        let mut f = r.zero();
        for (n, d, e) in &ts {
            let m = names.iter().zip(e).fold(r.one(), |acc, (v, &k)| &acc * &r.v(v).pow(k.unsigned_abs()));
            f = &f + &m.scale(&rat(*n, *d));
        }
        let once = reduce_mod_relation(&f, rel.poly(), &rel.leading()).unwrap();
        prop_assert!(rel.is_reduced(&once));
        prop_assert_eq!(rel.reduce(&once).unwrap(), once.clone());
        // The difference lies in the ideal, so it vanishes on the relation.
        let diff = &f - &once;
        let on_relation = diff.substitute(&[("a", r.one()), ("d", r.p("1 + b*c - alpha*delta"))]).unwrap();
        prop_assert!(on_relation.is_zero());
        Ok(())
    })
}

pub fn nullspace_vectors_are_exact() -> Result<(), String> {
    let rows = prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..5);
    run(SCALAR_CASES, (rows, 1i64..4), |(rows, den)| {
        let m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x, den)).collect()).collect();
        let ns = linalg::nullspace(&m, 5);
        prop_assert_eq!(ns.len() + linalg::rank(&m, 5), 5);
        for v in &ns {
            prop_assert!(linalg::apply(&m, v).iter().all(|x| *x == int(0)));
        }
        Ok(())
    })
}

/// A unimodular (a, b, c, d) with `a != 0`.
fn unimodular() -> impl Strategy<Value = [Rational; 4]> {
    (prop_oneof![-3i64..=-1, 1i64..=3], -3i64..=3, -3i64..=3).prop_map(|(a, b, c)| [int(a), int(b), int(c), rat(1 + b * c, a)])
}

fn e2_gen() -> impl Strategy<Value = E2Generator> {
    let r = parameter_ring();
    prop_oneof![
        Just(E2Generator::Flip),
        (prop_oneof![-3i64..=-1, 1i64..=3], prop_oneof![-3i64..=-1, 1i64..=3])
            .prop_map(|(a, b)| E2Generator::Scale(rat(1, a), int(b))),
        (-3i64..=3, -3i64..=3).prop_map(move |(a, b)| E2Generator::Shift(r.int(a), r.rat(b, 2))),
    ]
}

pub fn osp_transform_is_functorial() -> Result<(), String> {
    let xyz = prop::collection::vec(-2i64..=2, 3);
    run(TRANSFORM_CASES, (unimodular(), unimodular(), xyz), |(p, q, xyz)| {
        let osp = osp12();
        let [a, b, c, d] = p;
        let phi = osp_rational(a, b, c, d).unwrap();
        let [a, b, c, d] = q;
        let psi = osp_rational(a, b, c, d).unwrap();
        prop_assert!(phi.preserves(&osp));
        let f = family(&FamilyId::parse("osp-r-a", &format!("x={},y={},z={}", xyz[0], xyz[1], xyz[2])).unwrap()).unwrap();
        let r = f.rmatrix().unwrap();
        let once = phi.compose(&psi).transform_rmatrix(&osp, r);
        let twice = phi.transform_rmatrix(&osp, &psi.transform_rmatrix(&osp, r));
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(cybe_status(&osp, &once, &[]), cybe_status(&osp, r, &[]));
        let back = phi.inverse().transform_rmatrix(&osp, &phi.transform_rmatrix(&osp, r));
        prop_assert_eq!(&back, r);
        Ok(())
    })
}

pub fn e2_transform_is_functorial() -> Result<(), String> {
    let abc = prop::collection::vec(-2i64..=2, 3);
    run(TRANSFORM_CASES, (e2_gen(), e2_gen(), abc), |(g, h, abc)| {
        let e = super_e2();
        let phi = e2_automorphism(&g).unwrap();
        let psi = e2_automorphism(&h).unwrap();
        let f = family(&FamilyId::parse("e2-case-B", &format!("a={},b={},c={},d=0", abc[0], abc[1], abc[2])).unwrap()).unwrap();
        let d = f.cobracket();
        let once = phi.compose(&psi).transform_cobracket(&e, &d);
        let twice = phi.transform_cobracket(&e, &psi.transform_cobracket(&e, &d));
        prop_assert_eq!(&once, &twice);
        prop_assert!(check_cobracket(&e, &once, &[]).is_ok());
        Ok(())
    })
}
