//! Cobrackets and the Lie super-bialgebra axioms.
//!
//! A cobracket is stored as the images `δ(g_i) = f_i^{kl} g_k ⊗ g_l`. The
//! coboundary of an r-matrix is `δ(g) = g · r`, the adjoint action of `g` on
//! `r`; the opposite sign also satisfies the (linear) cocycle identity, and
//! this one is the orientation under which `δ_r` for `r = H∧P+` equals the
//! case-A cobracket at `a = 1, b = c = 0`.

pub mod families;

use std::fmt;

use crate::cotensor::{ad_action, render_wedges, schouten, GradedTensor, RMatrix, TensorError};
use crate::superalgebra::{BasisElement, SuperLieAlgebra};
use crate::superscalar::{reduce_all, Relation, Ring, ScalarError, SuperScalar};

pub use families::{family, Branch, Family, FamilyId, FamilyObject};

#[derive(Debug, Clone, PartialEq)]
pub struct Cobracket {
    images: Vec<GradedTensor>,
}

impl Cobracket {
    pub fn zero(alg: &SuperLieAlgebra) -> Cobracket {
        Cobracket { images: vec![GradedTensor::zero(alg.ring(), 2); alg.dim()] }
    }

    pub fn from_images(alg: &SuperLieAlgebra, images: Vec<GradedTensor>) -> Result<Cobracket, TensorError> {
        if images.len() != alg.dim() {
            return Err(TensorError::Parse(format!("expected {} images, got {}", alg.dim(), images.len())));
        }
        if let Some(t) = images.iter().find(|t| t.rank() != 2) {
            return Err(TensorError::Rank { expected: "2".into(), got: t.rank() });
        }
        Ok(Cobracket { images })
    }

    pub fn image(&self, i: usize) -> &GradedTensor {
        &self.images[i]
    }

    pub fn images(&self) -> &[GradedTensor] {
        &self.images
    }

    pub fn set_image(&mut self, i: usize, t: GradedTensor) {
        self.images[i] = t;
    }

    /// `f_i^{kl}`.
    pub fn f(&self, i: usize, k: usize, l: usize) -> SuperScalar {
        self.images[i].coeff(&[k, l])
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(GradedTensor::is_zero)
    }

    pub fn add(&self, other: &Cobracket) -> Cobracket {
        Cobracket { images: self.images.iter().zip(&other.images).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Cobracket) -> Cobracket {
        Cobracket { images: self.images.iter().zip(&other.images).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, q: &SuperScalar) -> Cobracket {
        Cobracket { images: self.images.iter().map(|t| t.scale(q)).collect() }
    }

    pub fn reduce(&self, relations: &[Relation]) -> Cobracket {
        Cobracket { images: self.images.iter().map(|t| t.reduce(relations)).collect() }
    }

    pub fn embed(&self, ring: &Ring) -> Result<Cobracket, ScalarError> {
        Ok(Cobracket { images: self.images.iter().map(|t| t.embed(ring)).collect::<Result<_, _>>()? })
    }

    pub fn substitute(&self, bindings: &[(&str, SuperScalar)]) -> Result<Cobracket, ScalarError> {
        Ok(Cobracket { images: self.images.iter().map(|t| t.substitute(bindings)).collect::<Result<_, _>>()? })
    }

    /// `δ(x)` for a rank-1 element with even coefficients.
    pub fn apply(&self, x: &GradedTensor) -> GradedTensor {
        let mut out = GradedTensor::zero(x.ring(), 2);
        for (k, q) in x.terms() {
            out = out.add(&self.images[k[0]].scale(q));
        }
        out
    }

    /// The dual algebra on G*: `[g^k, g^l] = f_i^{kl} g^i`.
    pub fn dual_algebra(&self, alg: &SuperLieAlgebra) -> SuperLieAlgebra {
        let basis: Vec<BasisElement> =
            alg.basis().iter().map(|b| BasisElement { name: format!("{}*", b.name), grade: b.grade }).collect();
        let mut dual = SuperLieAlgebra::new(&format!("{}*", alg.name()), basis, alg.ring().clone()).expect("distinct");
        let n = alg.dim();
        for i in 0..n {
            for k in 0..n {
                for l in 0..n {
                    dual.set_constant(k, l, i, self.f(i, k, l));
                }
            }
        }
        dual
    }

    /// `delta X = <coef> A^B + ...` rows, one per basis element.
    pub fn render(&self, alg: &SuperLieAlgebra) -> String {
        let mut out = String::new();
        for i in 0..alg.dim() {
            out.push_str(&format!("delta {} = {}\n", alg.basis_name(i), render_wedges(alg, &self.images[i])));
        }
        out
    }

    /// Parses `delta X = ...` rows; generators without a row map to zero.
    pub fn parse(alg: &SuperLieAlgebra, text: &str) -> Result<Cobracket, TensorError> {
        let mut d = Cobracket::zero(alg);
        let mut seen = vec![false; alg.dim()];
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: String| TensorError::Parse(format!("line {}: {m}", ln + 1));
            let rest = line.strip_prefix("delta").ok_or_else(|| err("expected `delta X = ...`".into()))?;
            let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err("missing `=`".into()))?;
            let i = alg.index_of(lhs.trim()).map_err(|e| err(e.to_string()))?;
            if seen[i] {
                return Err(err(format!("`{}` listed twice", lhs.trim())));
            }
            seen[i] = true;
            d.images[i] = crate::cotensor::parse_wedge_sum(alg, rhs).map_err(|e| err(e.to_string()))?;
        }
        Ok(d)
    }
}

/// The four cobracket axiom families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoAxiom {
    Grading,
    Antisymmetry,
    CoJacobi,
    Cocycle,
}

impl CoAxiom {
    pub const ALL: [CoAxiom; 4] = [CoAxiom::Grading, CoAxiom::Antisymmetry, CoAxiom::CoJacobi, CoAxiom::Cocycle];
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoViolation {
    pub axiom: CoAxiom,
    pub indices: Vec<usize>,
    pub residual: SuperScalar,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CobracketReport {
    pub violations: Vec<CoViolation>,
    names: Vec<String>,
}

impl CobracketReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn passes(&self, axiom: CoAxiom) -> bool {
        !self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn failures(&self, axiom: CoAxiom) -> impl Iterator<Item = &CoViolation> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    /// Failing axiom families.
    pub fn failing(&self) -> Vec<CoAxiom> {
        CoAxiom::ALL.into_iter().filter(|a| !self.passes(*a)).collect()
    }
}

impl fmt::Display for CobracketReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for axiom in CoAxiom::ALL {
            let n = self.failures(axiom).count();
            writeln!(f, "{:<13} {}", format!("{axiom:?}"), if n == 0 { "pass".into() } else { format!("FAIL ({n})") })?;
            for v in self.failures(axiom).take(6) {
                let idx: Vec<&str> = v.indices.iter().map(|&i| self.names.get(i).map(String::as_str).unwrap_or("?")).collect();
                writeln!(f, "  ({}) residual {}", idx.join(","), v.residual)?;
            }
        }
        Ok(())
    }
}

/// Cocycle residual `δ([g_i,g_j]) - g_i·δ(g_j) + z(i,j) g_j·δ(g_i)` as a
/// rank-2 tensor; zero for every pair exactly when δ is a 1-cocycle.
pub fn cocycle_residual(alg: &SuperLieAlgebra, d: &Cobracket, i: usize, j: usize) -> GradedTensor {
    let lhs = d.apply(&alg.bracket_basis(i, j));
    let gi = ad_action(alg, i, d.image(j)).expect("rank 2");
    let gj = ad_action(alg, j, d.image(i)).expect("rank 2");
    lhs.sub(&gi).add(&gj.scale(&alg.ring().int(alg.z(i, j))))
}

/// The cocycle identity in index form,
/// `c_ij^k f_k^lm - f_i^lk c_kj^m - c_kj^l f_i^km z(m,j) - c_ik^l f_j^km - f_j^lk c_ik^m z(i,l)`.
/// Agrees with [`cocycle_residual`] on grading-respecting cobrackets.
pub fn cocycle_residual_indexed(alg: &SuperLieAlgebra, d: &Cobracket, i: usize, j: usize, l: usize, m: usize) -> SuperScalar {
    let mut acc = alg.ring().zero();
    for k in 0..alg.dim() {
        acc = acc + alg.c(i, j, k) * d.f(k, l, m)
            - d.f(i, l, k) * alg.c(k, j, m)
            - (alg.c(k, j, l) * d.f(i, k, m)).scale_int(alg.z(m, j))
            - alg.c(i, k, l) * d.f(j, k, m)
            - (d.f(j, l, k) * alg.c(i, k, m)).scale_int(alg.z(i, l));
    }
    acc
}

/// Super co-Jacobi residual for the free indices `(i; k, l, m)`.
pub fn cojacobi_residual(alg: &SuperLieAlgebra, d: &Cobracket, i: usize, k: usize, l: usize, m: usize) -> SuperScalar {
    let mut acc = alg.ring().zero();
    for j in 0..alg.dim() {
        acc = acc
            + (d.f(i, k, j) * d.f(j, l, m)).scale_int(alg.z(k, m))
            + (d.f(i, l, j) * d.f(j, m, k)).scale_int(alg.z(l, k))
            + (d.f(i, m, j) * d.f(j, k, l)).scale_int(alg.z(m, l));
    }
    acc
}

/// Checks grading, graded antisymmetry, co-Jacobi and the cocycle identity,
/// reducing every residual modulo `relations`.
pub fn check_cobracket(alg: &SuperLieAlgebra, d: &Cobracket, relations: &[Relation]) -> CobracketReport {
    let n = alg.dim();
    let red = |x: SuperScalar| reduce_all(&x, relations);
    let mut rep = CobracketReport { names: alg.basis().iter().map(|b| b.name.clone()).collect(), ..Default::default() };
    let mut push = |axiom, indices, residual: SuperScalar| {
        if !residual.is_zero() {
            rep.violations.push(CoViolation { axiom, indices, residual });
        }
    };
    for i in 0..n {
        for k in 0..n {
            for l in 0..n {
                let f = d.f(i, k, l);
                if alg.grade(k).sum(alg.grade(l)) != alg.grade(i) {
                    push(CoAxiom::Grading, vec![i, k, l], red(f.clone()));
                }
                push(CoAxiom::Antisymmetry, vec![i, k, l], red(&f + &d.f(i, l, k).scale_int(alg.z(k, l))));
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            for l in 0..n {
                for m in 0..n {
                    push(CoAxiom::CoJacobi, vec![i, k, l, m], red(cojacobi_residual(alg, d, i, k, l, m)));
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let r = cocycle_residual(alg, d, i, j).reduce(relations);
            for (lm, q) in r.terms() {
                push(CoAxiom::Cocycle, vec![i, j, lm[0], lm[1]], q.clone());
            }
        }
    }
    rep
}

/// `δ_r(g_i) = g_i · r`.
pub fn coboundary_delta(alg: &SuperLieAlgebra, r: &RMatrix) -> Cobracket {
    let images = (0..alg.dim()).map(|i| ad_action(alg, i, r.tensor()).expect("rank 2")).collect();
    Cobracket { images }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CybeStatus {
    /// `[[r,r]] = 0`.
    Cybe,
    /// `[[r,r]] != 0` but ad-invariant.
    ModifiedOnly,
    Neither,
}

impl fmt::Display for CybeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CybeStatus::Cybe => "CYBE",
            CybeStatus::ModifiedOnly => "mCYBE-only",
            CybeStatus::Neither => "neither",
        })
    }
}

pub fn cybe_status(alg: &SuperLieAlgebra, r: &RMatrix, relations: &[Relation]) -> CybeStatus {
    let s = schouten(alg, r).reduce(relations);
    if s.is_zero() {
        return CybeStatus::Cybe;
    }
    let invariant = (0..alg.dim()).all(|g| ad_action(alg, g, &s).expect("rank 3").reduce(relations).is_zero());
    if invariant {
        CybeStatus::ModifiedOnly
    } else {
        CybeStatus::Neither
    }
}
