//! Left- and right-invariant vector fields and their action as graded
//! derivations.

use std::fmt;

use crate::superscalar::{reduce_all, Parity, Relation, Ring, SuperScalar, VarKind};

use super::Group;

/// `Y` fields are left-invariant, `X` fields right-invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariance {
    Y,
    X,
}

/// Which side an odd field differentiates from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn tag(self) -> &'static str {
        match self {
            Side::Left => "l",
            Side::Right => "r",
        }
    }
}

/// A graded derivation given by its values on the ring variables.
///
/// Left derivations obey `D(fg) = D(f)g + (-1)^{|D||f|} f D(g)`, right ones
/// `D(fg) = f D(g) + (-1)^{|D||g|} D(f) g`. For even fields the two agree.
#[derive(Debug, Clone)]
pub struct VectorField {
    generator: String,
    invariance: Invariance,
    side: Side,
    parity: Parity,
    action: Vec<Option<SuperScalar>>,
    relations: Vec<Relation>,
}

impl VectorField {
    pub(crate) fn new(
        generator: &str,
        invariance: Invariance,
        side: Side,
        parity: Parity,
        action: Vec<Option<SuperScalar>>,
        relations: Vec<Relation>,
    ) -> Self {
        VectorField { generator: generator.to_string(), invariance, side, parity, action, relations }
    }

    pub fn generator(&self) -> &str {
        &self.generator
    }

    pub fn invariance(&self) -> Invariance {
        self.invariance
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Value on ring variable `i` (zero when the table is silent).
    pub fn on_variable(&self, i: usize, ring: &Ring) -> SuperScalar {
        self.action.get(i).cloned().flatten().unwrap_or_else(|| ring.zero())
    }

    /// The field applied to an arbitrary element, reduced modulo the
    /// ring relations.
    pub fn apply(&self, f: &SuperScalar) -> SuperScalar {
        let ring = f.ring();
        let p = self.parity.bit();
        let sign = |n: usize| if (p * n) % 2 == 1 { -1 } else { 1 };
        let var = |i: usize| ring.v(ring.name(i));
        let mut out = ring.zero();
        for (m, q) in f.terms() {
            let mut even: Vec<(usize, i32)> = Vec::new();
            let mut odd: Vec<usize> = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match ring.kind(i) {
                    VarKind::Grassmann => odd.push(i),
                    _ => even.push((i, e)),
                }
            }
            let even_part = |lowered: Option<usize>| {
                even.iter().fold(ring.one(), |acc, &(i, e)| {
                    let e = if Some(i) == lowered { e - 1 } else { e };
                    &acc * &var(i).powi(e).expect("laurent or nonnegative power")
                })
            };
            let theta: Vec<SuperScalar> = odd.iter().map(|&i| var(i)).collect();
            let prod = |xs: &[SuperScalar]| xs.iter().fold(ring.one(), |acc, x| &acc * x);
            let u = even_part(None);
            let big_theta = prod(&theta);

            let mut du = ring.zero();
            for &(i, e) in &even {
                let img = self.on_variable(i, ring);
                if !img.is_zero() {
                    du = &du + &(&even_part(Some(i)) * &img).scale_int(e as i64);
                }
            }
            let k = theta.len();
            let mut dtheta = ring.zero();
            for j in 0..k {
                let img = self.on_variable(odd[j], ring);
                if img.is_zero() {
                    continue;
                }
                let passed = match self.side {
                    Side::Left => j,
                    Side::Right => k - 1 - j,
                };
                let t = &(&prod(&theta[..j]) * &img) * &prod(&theta[j + 1..]);
                dtheta = &dtheta + &t.scale_int(sign(passed));
            }
            let term = match self.side {
                Side::Left => &(&du * &big_theta) + &(&u * &dtheta),
                Side::Right => &(&u * &dtheta) + &(&du * &big_theta).scale_int(sign(k)),
            };
            out = &out + &term.scale(q);
        }
        reduce_all(&out, &self.relations)
    }

    /// The same field on another ring, with variable `i` sent to variable
    /// `var_map[i]` and every value mapped by `map`.
    pub(crate) fn transport<F>(&self, ring: &Ring, relations: &[Relation], var_map: &[usize], map: F) -> VectorField
    where
        F: Fn(&SuperScalar) -> SuperScalar,
    {
        let mut action = vec![None; ring.len()];
        for (i, v) in self.action.iter().enumerate() {
            if let Some(v) = v {
                action[var_map[i]] = Some(map(v));
            }
        }
        VectorField { action, relations: relations.to_vec(), ..self.clone() }
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.invariance {
            Invariance::Y => "Y",
            Invariance::X => "X",
        };
        write!(f, "{kind}_{}^({})", self.generator, self.side.tag())
    }
}

/// Values of a field on the group coordinates, as text over the coordinate
/// ring. On OSp(1|2) the words `e`, `gamma`, `beta` abbreviate
/// `1 + alpha*delta`, `c*alpha - a*delta` and `d*alpha - b*delta`. On
/// super-E(2), `E = exp(s/2)`.
pub(crate) fn table(group: Group, generator: &str, inv: Invariance, side: Side) -> &'static [(&'static str, &'static str)] {
    use Invariance::*;
    use Side::*;
    match group {
        Group::SuperE2 => match (generator, inv, side) {
            ("H", Y, _) => &[("a", "-a"), ("b", "b"), ("s", "1"), ("xi", "-xi/2"), ("eta", "eta/2")],
            ("H", X, _) => &[("s", "1")],
            ("P+", Y, _) => &[("a", "1")],
            ("P+", X, _) => &[("a", "E^-2")],
            ("P-", Y, _) => &[("b", "1")],
            ("P-", X, _) => &[("b", "E^2")],
            ("D-", Y, Right) => &[("b", "eta/2"), ("eta", "1")],
            ("D-", X, Right) => &[("b", "-eta*E/2"), ("eta", "E")],
            ("D-", Y, Left) => &[("b", "-eta/2"), ("eta", "1")],
            ("D-", X, Left) => &[("b", "eta*E/2"), ("eta", "E")],
            ("D+", Y, Right) => &[("a", "xi/2"), ("xi", "1")],
            ("D+", X, Right) => &[("a", "-xi*E^-1/2"), ("xi", "E^-1")],
            ("D+", Y, Left) => &[("a", "-xi/2"), ("xi", "1")],
            ("D+", X, Left) => &[("a", "xi*E^-1/2"), ("xi", "E^-1")],
            _ => &[],
        },
        Group::Osp12 => match (generator, inv, side) {
            ("H", Y, _) => &[("a", "a/2"), ("b", "-b/2"), ("c", "c/2"), ("d", "-d/2")],
            ("H", X, _) => &[
                ("a", "a/2"),
                ("alpha", "alpha/2"),
                ("b", "b/2"),
                ("c", "-c/2"),
                ("delta", "-delta/2"),
                ("d", "-d/2"),
            ],
            ("X+", Y, _) => &[("b", "a"), ("d", "c")],
            ("X+", X, _) => &[("a", "c"), ("alpha", "delta"), ("b", "d")],
            ("X-", Y, _) => &[("a", "b"), ("c", "d")],
            ("X-", X, _) => &[("c", "a"), ("delta", "alpha"), ("d", "b")],
            ("V+", Y, Right) => &[("alpha", "a/2"), ("b", "alpha/2"), ("delta", "c/2"), ("d", "delta/2")],
            ("V+", X, Right) => &[("a", "-gamma/2"), ("alpha", "e/2"), ("b", "-beta/2")],
            ("V+", Y, Left) => &[("alpha", "a/2"), ("b", "-alpha/2"), ("delta", "c/2"), ("d", "-delta/2")],
            ("V+", X, Left) => &[("a", "gamma/2"), ("alpha", "e/2"), ("b", "beta/2")],
            ("V-", Y, Right) => &[("a", "-alpha/2"), ("alpha", "b/2"), ("c", "-delta/2"), ("delta", "d/2")],
            ("V-", X, Right) => &[("c", "-gamma/2"), ("delta", "e/2"), ("d", "-beta/2")],
            ("V-", Y, Left) => &[("a", "alpha/2"), ("alpha", "b/2"), ("c", "delta/2"), ("delta", "d/2")],
            ("V-", X, Left) => &[("c", "gamma/2"), ("delta", "e/2"), ("d", "beta/2")],
            _ => &[],
        },
    }
}

/// Replaces the OSp(1|2) abbreviations `e`, `gamma`, `beta` by their
/// definitions, matching whole identifiers only.
pub(crate) fn expand_osp_macros(text: &str) -> String {
    let mut out = String::new();
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String| {
        out.push_str(match word.as_str() {
            "e" => "(1 + alpha*delta)",
            "gamma" => "(c*alpha - a*delta)",
            "beta" => "(d*alpha - b*delta)",
            w => w,
        });
        word.clear();
    };
    for ch in text.chars() {
        if ch.is_alphanumeric() || ch == '_' {
            word.push(ch);
        } else {
            flush(&mut word, &mut out);
            out.push(ch);
        }
    }
    flush(&mut word, &mut out);
    out
}
