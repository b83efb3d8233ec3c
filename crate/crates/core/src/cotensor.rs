//! Graded tensors of rank 1..=3 over a Lie superalgebra, the super wedge,
//! the adjoint action on tensor powers and the Schouten bracket.
//!
//! A tensor is `sum f_{i..} g_i ⊗ ...` with the scalar written on the left.
//! Wedge convention: `x ∧ y = x ⊗ y - z(x,y) y ⊗ x`, no factor 1/2, so for
//! odd `x` the square `x ∧ x = 2 x ⊗ x` is nonzero.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::superalgebra::SuperLieAlgebra;
use crate::superscalar::{reduce_all, Parity, Relation, Ring, ScalarError, SuperScalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TensorError {
    #[error("expected rank {expected}, got {got}")]
    Rank { expected: String, got: usize },
    #[error("r-matrix must be even: {0}")]
    NotEven(String),
    #[error("r-matrix is not graded antisymmetric: {0}")]
    NotAntisymmetric(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Element of G, G⊗G or G⊗G⊗G with canonical (zero-free) coefficients.
#[derive(Clone, PartialEq)]
pub struct GradedTensor {
    ring: Ring,
    rank: usize,
    coeffs: BTreeMap<Vec<usize>, SuperScalar>,
}

impl fmt::Debug for GradedTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (k, v) in &self.coeffs {
            m.entry(k, &v.to_string());
        }
        m.finish()
    }
}

impl GradedTensor {
    pub fn zero(ring: &Ring, rank: usize) -> Self {
        GradedTensor { ring: ring.clone(), rank, coeffs: BTreeMap::new() }
    }

    /// `g_{i1} ⊗ ... ⊗ g_{ik}` with coefficient 1.
    pub fn basis(ring: &Ring, idx: Vec<usize>) -> Self {
        let mut t = GradedTensor::zero(ring, idx.len());
        t.add_term(idx, ring.one());
        t
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &SuperScalar)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> SuperScalar {
        self.coeffs.get(idx).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add_term(&mut self, idx: Vec<usize>, q: SuperScalar) {
        assert_eq!(idx.len(), self.rank, "index length must equal rank");
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(idx) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &q;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &GradedTensor) -> GradedTensor {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &GradedTensor) -> GradedTensor {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedTensor {
        self.map_coeffs(|c| -c)
    }

    /// `f · t` with the scalar placed on the left.
    pub fn scale(&self, f: &SuperScalar) -> GradedTensor {
        self.map_coeffs(|c| f * c)
    }

    pub fn map_coeffs<F: Fn(&SuperScalar) -> SuperScalar>(&self, f: F) -> GradedTensor {
        let mut out = GradedTensor::zero(&self.ring, self.rank);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    /// Coefficients reduced modulo parameter relations.
    pub fn reduce(&self, relations: &[Relation]) -> GradedTensor {
        if relations.is_empty() {
            return self.clone();
        }
        self.map_coeffs(|c| reduce_all(c, relations))
    }

    pub fn embed(&self, ring: &Ring) -> Result<GradedTensor, ScalarError> {
        let mut out = GradedTensor::zero(ring, self.rank);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), v.embed(ring)?);
        }
        Ok(out)
    }

    pub fn substitute(&self, bindings: &[(&str, SuperScalar)]) -> Result<GradedTensor, ScalarError> {
        let ring = bindings.first().map(|(_, v)| v.ring().clone()).unwrap_or_else(|| self.ring.clone());
        let mut out = GradedTensor::zero(&ring, self.rank);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), v.substitute(bindings)?);
        }
        Ok(out)
    }

    /// Total parity (coefficient plus basis grades) if homogeneous.
    pub fn parity(&self, alg: &SuperLieAlgebra) -> Option<Parity> {
        let mut seen = None;
        for (k, v) in &self.coeffs {
            let basis = k.iter().fold(Parity::Even, |p, &i| p.sum(alg.grade(i)));
            let p = v.parity()?.sum(basis);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    /// Graded antisymmetry of a rank-2 table: `t^{kl} = -z(k,l) t^{lk}`.
    pub fn is_graded_antisymmetric(&self, alg: &SuperLieAlgebra) -> bool {
        self.rank == 2
            && self.coeffs.iter().all(|(k, v)| {
                let partner = self.coeff(&[k[1], k[0]]);
                (v + &partner.scale_int(alg.z(k[0], k[1]))).is_zero()
            })
    }

    /// Graded tensor product `x ⊗ y` with the Koszul sign for moving the
    /// scalar of `y` past the basis part of `x`.
    pub fn tensor(&self, other: &GradedTensor, alg: &SuperLieAlgebra) -> GradedTensor {
        let mut out = GradedTensor::zero(&self.ring, self.rank + other.rank);
        for (kx, fx) in &self.coeffs {
            let px = kx.iter().fold(Parity::Even, |p, &i| p.sum(alg.grade(i)));
            for (ky, fy) in &other.coeffs {
                let (even, odd) = fy.split_parity();
                let g = if px.is_odd() { &even - &odd } else { &even + &odd };
                let mut idx = kx.clone();
                idx.extend(ky);
                out.add_term(idx, fx * &g);
            }
        }
        out
    }
}

/// `x ∧ y = x ⊗ y - z(x,y) y ⊗ x`.
pub fn wedge(alg: &SuperLieAlgebra, x: usize, y: usize) -> GradedTensor {
    let ring = alg.ring();
    let mut t = GradedTensor::zero(ring, 2);
    t.add_term(vec![x, y], ring.one());
    t.add_term(vec![y, x], ring.int(-alg.z(x, y)));
    t
}

/// Adjoint action of the basis element `g` on a rank-2 or rank-3 tensor:
/// `g · (x ⊗ y) = [g,x] ⊗ y + z(g,x) x ⊗ [g,y]` (and the analogous rule with
/// two crossings on rank 3); scalars pick up `z(g,f)`.
pub fn ad_action(alg: &SuperLieAlgebra, g: usize, t: &GradedTensor) -> Result<GradedTensor, TensorError> {
    if !(2..=3).contains(&t.rank()) {
        return Err(TensorError::Rank { expected: "2 or 3".into(), got: t.rank() });
    }
    let ring = alg.ring();
    let mut out = GradedTensor::zero(ring, t.rank());
    for (idx, f) in t.terms() {
        let (even, odd) = f.split_parity();
        let f = if alg.grade(g).is_odd() { &even - &odd } else { &even + &odd };
        let mut sign = 1i64;
        for slot in 0..idx.len() {
            for k in 0..alg.dim() {
                let c = alg.c(g, idx[slot], k);
                if c.is_zero() {
                    continue;
                }
                let mut nidx = idx.clone();
                nidx[slot] = k;
                out.add_term(nidx, (&f * c).scale_int(sign));
            }
            sign *= alg.z(g, idx[slot]);
        }
    }
    Ok(out)
}

/// An even, graded-antisymmetric rank-2 tensor coupling only even-even or
/// odd-odd basis pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct RMatrix(GradedTensor);

impl RMatrix {
    pub fn new(alg: &SuperLieAlgebra, t: GradedTensor) -> Result<RMatrix, TensorError> {
        if t.rank() != 2 {
            return Err(TensorError::Rank { expected: "2".into(), got: t.rank() });
        }
        for (k, v) in t.terms() {
            if v.parity() != Some(Parity::Even) {
                return Err(TensorError::NotEven(format!("coefficient {v} is not even")));
            }
            if alg.grade(k[0]) != alg.grade(k[1]) {
                return Err(TensorError::NotEven(format!(
                    "couples {} with {}",
                    alg.basis_name(k[0]),
                    alg.basis_name(k[1])
                )));
            }
        }
        if !t.is_graded_antisymmetric(alg) {
            return Err(TensorError::NotAntisymmetric(render_wedges(alg, &t)));
        }
        Ok(RMatrix(t))
    }

    /// Sum of `coefficient * (x ∧ y)` terms.
    pub fn from_wedges(alg: &SuperLieAlgebra, terms: &[(SuperScalar, &str, &str)]) -> Result<RMatrix, TensorError> {
        let mut t = GradedTensor::zero(alg.ring(), 2);
        for (q, x, y) in terms {
            let x = alg.index_of(x).map_err(|e| TensorError::Parse(e.to_string()))?;
            let y = alg.index_of(y).map_err(|e| TensorError::Parse(e.to_string()))?;
            t = t.add(&wedge(alg, x, y).scale(q));
        }
        RMatrix::new(alg, t)
    }

    pub fn zero(alg: &SuperLieAlgebra) -> RMatrix {
        RMatrix(GradedTensor::zero(alg.ring(), 2))
    }

    pub fn tensor(&self) -> &GradedTensor {
        &self.0
    }

    pub fn into_tensor(self) -> GradedTensor {
        self.0
    }

    pub fn scale(&self, f: &SuperScalar) -> RMatrix {
        RMatrix(self.0.scale(f))
    }

    pub fn add(&self, other: &RMatrix) -> RMatrix {
        RMatrix(self.0.add(&other.0))
    }
}

/// Commutator of two elementary words in U(G)^{⊗3} that share exactly one
/// non-identity slot. Slots holding `None` are the unit.
///
/// With `X = x1⊗x2⊗x3`, `Y = y1⊗y2⊗y3`, the product picks up
/// `s = prod_{i>j} (-1)^{|x_i||y_j|}` from carrying each `y_j` left past the
/// `x_i` standing to its right, and `XY - z(X,Y) YX = s · (...⊗[x_t, y_t]⊗...)`
/// where `t` is the shared slot. This is the only place the Schouten bracket
/// decides a sign.
fn slot_commutator(alg: &SuperLieAlgebra, x: [Option<usize>; 3], y: [Option<usize>; 3]) -> GradedTensor {
    let grade = |o: Option<usize>| o.map(|i| alg.grade(i)).unwrap_or(Parity::Even);
    let odd_swaps = (0..3)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .filter(|&(i, j)| grade(x[i]).is_odd() && grade(y[j]).is_odd())
        .count();
    let sign = if odd_swaps.is_multiple_of(2) { 1 } else { -1 };
    let shared = (0..3).find(|&t| x[t].is_some() && y[t].is_some()).expect("words share a slot");
    let base: Vec<usize> = (0..3).map(|t| x[t].or(y[t]).unwrap_or(0)).collect();
    let ring = alg.ring();
    let mut out = GradedTensor::zero(ring, 3);
    let (a, b) = (x[shared].unwrap(), y[shared].unwrap());
    for k in 0..alg.dim() {
        let c = alg.c(a, b, k);
        if !c.is_zero() {
            let mut idx = base.clone();
            idx[shared] = k;
            out.add_term(idx, c.scale_int(sign));
        }
    }
    out
}

/// `[[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]`.
pub fn schouten(alg: &SuperLieAlgebra, r: &RMatrix) -> GradedTensor {
    let ring = alg.ring();
    let mut out = GradedTensor::zero(ring, 3);
    let terms: Vec<(&Vec<usize>, &SuperScalar)> = r.tensor().terms().collect();
    for (ab, f1) in &terms {
        for (cd, f2) in &terms {
            let coeff = *f1 * *f2;
            let (a, b, c, d) = (ab[0], ab[1], cd[0], cd[1]);
            let parts = [
                slot_commutator(alg, [Some(a), Some(b), None], [Some(c), None, Some(d)]),
                slot_commutator(alg, [Some(a), Some(b), None], [None, Some(c), Some(d)]),
                slot_commutator(alg, [Some(a), None, Some(b)], [None, Some(c), Some(d)]),
            ];
            for p in parts {
                out = out.add(&p.scale(&coeff));
            }
        }
    }
    out
}

/// Parses `r = 1 H^P+ - 1 V+^V+` (the `r =` prefix is optional).
pub fn parse_rmatrix(alg: &SuperLieAlgebra, text: &str) -> Result<RMatrix, TensorError> {
    let t = parse_wedge_sum(alg, text.trim().strip_prefix("r").and_then(|s| s.trim_start().strip_prefix('=')).unwrap_or(text))?;
    RMatrix::new(alg, t)
}

/// Parses a sum of `<coef> <x>^<y>` terms separated by `+`/`-`. A lone `0`
/// is the zero tensor.
pub fn parse_wedge_sum(alg: &SuperLieAlgebra, text: &str) -> Result<GradedTensor, TensorError> {
    let ring = alg.ring();
    let toks: Vec<&str> = text.split_whitespace().collect();
    let mut out = GradedTensor::zero(ring, 2);
    if toks == ["0"] {
        return Ok(out);
    }
    let mut i = 0;
    let mut negate = false;
    if toks.is_empty() {
        return Err(TensorError::Parse("empty tensor".into()));
    }
    while i < toks.len() {
        match toks[i] {
            "+" => {
                negate = false;
                i += 1;
                continue;
            }
            "-" => {
                negate = true;
                i += 1;
                continue;
            }
            _ => {}
        }
        let coef = ring.parse(toks[i]).map_err(|e| TensorError::Parse(format!("coefficient `{}`: {e}", toks[i])))?;
        let w = toks.get(i + 1).ok_or_else(|| TensorError::Parse(format!("missing wedge after `{}`", toks[i])))?;
        let (x, y) = w.split_once('^').ok_or_else(|| TensorError::Parse(format!("expected `x^y`, got `{w}`")))?;
        let x = alg.index_of(x).map_err(|e| TensorError::Parse(e.to_string()))?;
        let y = alg.index_of(y).map_err(|e| TensorError::Parse(e.to_string()))?;
        let coef = if negate { -coef } else { coef };
        out = out.add(&wedge(alg, x, y).scale(&coef));
        negate = false;
        i += 2;
        if i < toks.len() && toks[i] != "+" && toks[i] != "-" {
            return Err(TensorError::Parse(format!("expected `+` or `-`, got `{}`", toks[i])));
        }
    }
    Ok(out)
}

/// Renders a graded-antisymmetric rank-2 tensor as a wedge sum; other
/// tensors fall back to `x(x)y` products.
pub fn render_wedges(alg: &SuperLieAlgebra, t: &GradedTensor) -> String {
    let mut parts: Vec<String> = Vec::new();
    if t.rank() == 2 && t.is_graded_antisymmetric(alg) {
        for (k, v) in t.terms() {
            if k[0] > k[1] {
                continue;
            }
            let coef = if k[0] == k[1] { v.scale(&crate::superscalar::rat(1, 2)) } else { v.clone() };
            parts.push(format!("{} {}^{}", coef.compact(), alg.basis_name(k[0]), alg.basis_name(k[1])));
        }
    } else {
        for (k, v) in t.terms() {
            let names: Vec<&str> = k.iter().map(|&i| alg.basis_name(i)).collect();
            parts.push(format!("{} {}", v.compact(), names.join("(x)")));
        }
    }
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        match (i, p.strip_prefix('-')) {
            (0, _) => out.push_str(p),
            (_, Some(rest)) => out.push_str(&format!(" - {rest}")),
            (_, None) => out.push_str(&format!(" + {p}")),
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::{osp12, super_e2};

    fn t2(alg: &SuperLieAlgebra, terms: &[(i64, &str, &str)]) -> GradedTensor {
        let mut t = GradedTensor::zero(alg.ring(), 2);
        for (q, x, y) in terms {
            t.add_term(vec![alg.idx(x), alg.idx(y)], alg.ring().int(*q));
        }
        t
    }

    #[test]
    fn wedge_examples() {
        let e = super_e2();
        let o = osp12();
        assert_eq!(wedge(&e, e.idx("H"), e.idx("P+")), t2(&e, &[(1, "H", "P+"), (-1, "P+", "H")]));
        assert_eq!(wedge(&o, o.idx("V+"), o.idx("V+")), t2(&o, &[(2, "V+", "V+")]));
        assert!(wedge(&e, e.idx("P+"), e.idx("P+")).is_zero());
    }

    #[test]
    fn wedge_graded_antisymmetry() {
        for a in [osp12(), super_e2()] {
            for x in 0..a.dim() {
                for y in 0..a.dim() {
                    let s = wedge(&a, x, y).add(&wedge(&a, y, x).scale(&a.ring().int(a.z(x, y))));
                    assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn ad_action_examples() {
        let e = super_e2();
        let h = e.idx("H");
        let t = GradedTensor::basis(e.ring(), vec![e.idx("P+"), e.idx("P-")]);
        assert!(ad_action(&e, h, &t).unwrap().is_zero());
        assert!(ad_action(&e, h, &GradedTensor::zero(e.ring(), 2)).unwrap().is_zero());
        let o = osp12();
        let xp = o.idx("X+");
        assert!(ad_action(&o, xp, &wedge(&o, o.idx("H"), xp)).unwrap().is_zero());
        assert!(matches!(ad_action(&o, xp, &o.element(xp)), Err(TensorError::Rank { .. })));
    }

    #[test]
    fn ad_action_is_derivation_over_tensor() {
        for a in [osp12(), super_e2()] {
            let ring = a.ring().clone();
            for g in 0..a.dim() {
                for x in 0..a.dim() {
                    for y in 0..a.dim() {
                        let xv = a.element(x);
                        let yv = a.element(y).scale(&ring.v("a"));
                        let lhs = ad_action(&a, g, &xv.tensor(&yv, &a)).unwrap();
                        let gx = a.bracket(&a.element(g), &xv).unwrap();
                        let gy = a.bracket(&a.element(g), &yv).unwrap();
                        let rhs = gx.tensor(&yv, &a).add(&xv.tensor(&gy, &a).scale(&ring.int(a.z(g, x))));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn schouten_of_triangular_examples_vanishes() {
        let e = super_e2();
        let r = RMatrix::from_wedges(&e, &[(e.ring().one(), "H", "P+")]).unwrap();
        assert!(schouten(&e, &r).is_zero());
        let o = osp12();
        let r1 = RMatrix::from_wedges(&o, &[(o.ring().one(), "H", "X+")]).unwrap();
        assert!(schouten(&o, &r1).is_zero());
        assert!(schouten(&o, &RMatrix::zero(&o)).is_zero());
    }

    #[test]
    fn rmatrix_rejects_mixed_and_odd() {
        let e = super_e2();
        let ring = e.ring().clone();
        assert!(RMatrix::from_wedges(&e, &[(ring.one(), "H", "D+")]).is_err());
        assert!(RMatrix::from_wedges(&e, &[(ring.v("xi"), "H", "P+")]).is_err());
        let not_anti = GradedTensor::basis(&ring, vec![0, 1]);
        assert!(matches!(RMatrix::new(&e, not_anti), Err(TensorError::NotAntisymmetric(_))));
    }

    #[test]
    fn parse_and_render() {
        let o = osp12();
        let r = parse_rmatrix(&o, "r = 1 H^X+ - 1 V+^V+").unwrap();
        let expect = t2(&o, &[(1, "H", "X+"), (-1, "X+", "H"), (-2, "V+", "V+")]);
        assert_eq!(r.tensor(), &expect);
        let back = parse_rmatrix(&o, &render_wedges(&o, r.tensor())).unwrap();
        assert_eq!(back, r);
        assert!(parse_rmatrix(&o, "1 H^Q").is_err());
        assert!(parse_rmatrix(&o, "1 H^X+ 2").is_err());
        assert!(parse_rmatrix(&o, "0").unwrap().tensor().is_zero());
        let t = parse_rmatrix(&o, "t H^X+ + (1/2*t) X+^X-").unwrap();
        assert_eq!(t.tensor().coeff(&[1, 2]), o.ring().p("t/2"));
    }
}
