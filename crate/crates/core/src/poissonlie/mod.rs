//! Poisson-Lie structures on the supergroups super-E(2) and OSp(1|2).
//!
//! Brackets are built from left-invariant (`Y`) and right-invariant (`X`)
//! vector fields: the coboundary form
//! `{f,g} = (Y_k^(r) f) r^{kj} (Y_j^(l) g) - (X_k^(r) f) r^{kj} (X_j^(l) g)`
//! and the cocycle form `{f,g} = (X_j^(r) f) Phi^{jk} (X_k^(l) g)`, with the
//! tensor coefficients read in their literal order.

mod fields;
pub mod tables;

use std::fmt;

use thiserror::Error;

use crate::bialgebra::{family, FamilyId};
use crate::cotensor::{parse_wedge_sum, GradedTensor, RMatrix};
use crate::superalgebra::{osp12, super_e2, SuperLieAlgebra};
use crate::superscalar::{reduce_all, Parity, Rational, Relation, Ring, SuperScalar, VarKind, Variable};

pub use fields::{Invariance, Side, VectorField};

#[derive(Debug, Error)]
pub enum PoissonError {
    #[error("unknown group `{0}` (expected super-e2 or osp12)")]
    UnknownGroup(String),
    #[error("unknown structure `{0}` for {1}")]
    UnknownStructure(String, Group),
    #[error("r-matrix coefficient `{0}` is not a rational constant")]
    SymbolicR(String),
    #[error("structure does not vanish at the identity: {0}")]
    NotVanishing(String),
    #[error("{0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    SuperE2,
    Osp12,
}

impl Group {
    pub fn parse(name: &str) -> Result<Group, PoissonError> {
        match name.to_ascii_lowercase().replace(['(', ')', '|', '_', ','], "").as_str() {
            "supere2" | "super-e2" | "e2" => Ok(Group::SuperE2),
            "osp12" | "osp" => Ok(Group::Osp12),
            _ => Err(PoissonError::UnknownGroup(name.to_string())),
        }
    }

    /// Structure names accepted by [`PoissonStructure::named`].
    pub fn structure_names(self) -> &'static [&'static str] {
        match self {
            Group::SuperE2 => &["i", "ii", "iii", "iv", "v", "vi"],
            Group::Osp12 => &["r1", "r2", "r3"],
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::SuperE2 => "super-e2",
            Group::Osp12 => "osp12",
        })
    }
}

const FIELD_SLOTS: [(Invariance, Side); 4] =
    [(Invariance::Y, Side::Right), (Invariance::Y, Side::Left), (Invariance::X, Side::Right), (Invariance::X, Side::Left)];

fn slot(inv: Invariance, side: Side) -> usize {
    FIELD_SLOTS.iter().position(|&s| s == (inv, side)).expect("all four slots listed")
}

/// The four fields of every basis element, in [`FIELD_SLOTS`] order.
#[derive(Debug, Clone)]
struct Frame {
    fields: Vec<Vec<VectorField>>,
}

impl Frame {
    fn get(&self, k: usize, inv: Invariance, side: Side) -> &VectorField {
        &self.fields[k][slot(inv, side)]
    }

    /// All fields of one slot applied to `f`.
    fn apply_all(&self, inv: Invariance, side: Side, f: &SuperScalar) -> Vec<SuperScalar> {
        self.fields.iter().map(|fs| fs[slot(inv, side)].apply(f)).collect()
    }
}

/// Functions on one of the two supergroups.
///
/// super-E(2) has even coordinates `s a b`, odd `xi eta`, the invertible
/// `E = exp(s/2)` and the family parameter `c`. OSp(1|2) has even `a b c d`,
/// odd `alpha delta` and the relation `ad - bc + alpha*delta = 1` with
/// leading term `ad`.
#[derive(Debug, Clone)]
pub struct CoordinateRing {
    group: Group,
    ring: Ring,
    relations: Vec<Relation>,
    algebra: SuperLieAlgebra,
    frame: Frame,
    generators: Vec<(String, SuperScalar)>,
}

impl CoordinateRing {
    pub fn new(group: Group) -> CoordinateRing {
        match group {
            Group::SuperE2 => Self::super_e2(),
            Group::Osp12 => Self::osp12(),
        }
    }

    pub fn super_e2() -> CoordinateRing {
        let ring = Ring::with_names(&["s", "a", "b", "c"], &["E"], &["xi", "eta"]).expect("static variable table");
        let generators = [("a", "a"), ("b", "b"), ("e^s", "E^2"), ("xi", "xi"), ("eta", "eta")];
        Self::build(Group::SuperE2, ring, Vec::new(), super_e2(), &generators)
    }

    pub fn osp12() -> CoordinateRing {
        let ring = Ring::with_names(&["a", "b", "c", "d"], &[], &["alpha", "delta"]).expect("static variable table");
        let rel = Relation::parse(&ring, "a*d - b*c + alpha*delta - 1", "a*d").expect("static relation");
        let generators = [("a", "a"), ("b", "b"), ("c", "c"), ("d", "d"), ("alpha", "alpha"), ("delta", "delta")];
        Self::build(Group::Osp12, ring, vec![rel], osp12(), &generators)
    }

    fn build(group: Group, ring: Ring, relations: Vec<Relation>, alg: SuperLieAlgebra, generators: &[(&str, &str)]) -> Self {
        let algebra = alg.with_ring(&ring).expect("numeric structure constants embed");
        let parse = |text: &str| {
            let text = if group == Group::Osp12 { fields::expand_osp_macros(text) } else { text.to_string() };
            reduce_all(&ring.p(&text), &relations)
        };
        let mut frame = Vec::new();
        for k in 0..algebra.dim() {
            let name = algebra.basis_name(k);
            let mut slots = Vec::new();
            for (inv, side) in FIELD_SLOTS {
                let mut action = vec![None; ring.len()];
                for (var, value) in fields::table(group, name, inv, side) {
                    action[ring.index_of(var).expect("table variable")] = Some(parse(value));
                }
                if group == Group::SuperE2 {
                    // E = exp(s/2), so D(E) = D(s) E / 2.
                    let ds = action[ring.index_of("s").unwrap()].clone().unwrap_or_else(|| ring.zero());
                    action[ring.index_of("E").unwrap()] = Some((&ds * &ring.v("E")).scale(&Rational::new(1.into(), 2.into())));
                }
                slots.push(VectorField::new(name, inv, side, algebra.grade(k), action, relations.clone()));
            }
            frame.push(slots);
        }
        let generators = generators.iter().map(|(n, e)| (n.to_string(), ring.p(e))).collect();
        CoordinateRing { group, ring, relations, algebra, frame: Frame { fields: frame }, generators }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The Lie superalgebra with coefficients in this ring, used to write
    /// group-dependent tensors such as cocycles.
    pub fn algebra(&self) -> &SuperLieAlgebra {
        &self.algebra
    }

    /// Named generators used in bracket tables (`e^s` is `E^2`).
    pub fn generators(&self) -> &[(String, SuperScalar)] {
        &self.generators
    }

    /// Ring variables that are group coordinates (parameters excluded).
    pub fn coordinates(&self) -> Vec<SuperScalar> {
        let names: &[&str] = match self.group {
            Group::SuperE2 => &["s", "a", "b", "E", "xi", "eta"],
            Group::Osp12 => &["a", "b", "c", "d", "alpha", "delta"],
        };
        names.iter().map(|n| self.ring.v(n)).collect()
    }

    /// Parses an element and reduces it modulo the relations.
    pub fn parse(&self, text: &str) -> Result<SuperScalar, PoissonError> {
        let x = self.ring.parse(text).map_err(|e| PoissonError::Parse(e.to_string()))?;
        Ok(self.reduce(&x))
    }

    pub fn reduce(&self, x: &SuperScalar) -> SuperScalar {
        reduce_all(x, &self.relations)
    }

    /// Value at the group identity; parameters stay symbolic.
    pub fn at_identity(&self, f: &SuperScalar) -> SuperScalar {
        let (zero, one) = (self.ring.zero(), self.ring.one());
        let bindings: Vec<(&str, SuperScalar)> = match self.group {
            Group::SuperE2 => vec![("s", zero.clone()), ("a", zero.clone()), ("b", zero.clone()), ("E", one), ("xi", zero.clone()), ("eta", zero)],
            Group::Osp12 => vec![
                ("a", one.clone()),
                ("b", zero.clone()),
                ("c", zero.clone()),
                ("d", one),
                ("alpha", zero.clone()),
                ("delta", zero),
            ],
        };
        self.reduce(f).substitute(&bindings).expect("bindings respect parity")
    }

    /// The invariant field of basis element `generator`.
    pub fn field(&self, generator: &str, inv: Invariance, side: Side) -> Option<&VectorField> {
        let k = self.algebra.index_of(generator).ok()?;
        Some(self.frame.get(k, inv, side))
    }

    /// Two copies of the group, the target of the coproduct.
    pub fn doubled(&self) -> DoubledRing {
        DoubledRing::new(self)
    }
}

/// Functions on `G x G`: every coordinate appears twice (suffixes `_1`,
/// `_2`) while parameters are shared. Elements `f(x)_1 g(x)_2` stand for
/// `f (x) g`; supercommutativity of the ring gives the Koszul signs of the
/// graded tensor product.
#[derive(Debug, Clone)]
pub struct DoubledRing {
    group: Group,
    ring: Ring,
    relations: Vec<Relation>,
    maps: [Vec<usize>; 2],
    frames: [Frame; 2],
}

impl DoubledRing {
    fn new(cr: &CoordinateRing) -> DoubledRing {
        let src = &cr.ring;
        let shared = |name: &str| cr.group == Group::SuperE2 && name == "c";
        let make = |name: String, kind: VarKind| match kind {
            VarKind::Commuting => Variable::commuting(&name),
            VarKind::Laurent => Variable::laurent(&name),
            VarKind::Grassmann => Variable::grassmann(&name),
        };
        let mut vars = Vec::new();
        for copy in 1..=2 {
            for i in 0..src.len() {
                let name = src.name(i);
                if shared(name) {
                    if copy == 1 {
                        vars.push(make(name.to_string(), src.kind(i)));
                    }
                } else {
                    vars.push(make(format!("{name}_{copy}"), src.kind(i)));
                }
            }
        }
        let ring = Ring::new(vars).expect("suffixed names are distinct");
        let map_for = |copy: usize| -> Vec<usize> {
            (0..src.len())
                .map(|i| {
                    let name = src.name(i);
                    let target = if shared(name) { name.to_string() } else { format!("{name}_{copy}") };
                    ring.index_of(&target).expect("variable was added")
                })
                .collect()
        };
        let maps = [map_for(1), map_for(2)];
        let copy_raw = |f: &SuperScalar, k: usize| {
            f.map_variables(&ring, |i| Ok(ring.v(ring.name(maps[k][i])))).expect("variable kinds match")
        };
        let mut relations = Vec::new();
        for k in 0..2 {
            for rel in &cr.relations {
                relations.push(Relation::new(&copy_raw(rel.poly(), k), &copy_raw(&rel.leading(), k)).expect("copied relation"));
            }
        }
        let frames = [0, 1].map(|k| Frame {
            fields: cr
                .frame
                .fields
                .iter()
                .map(|fs| fs.iter().map(|v| v.transport(&ring, &relations, &maps[k], |x| copy_raw(x, k))).collect())
                .collect(),
        });
        DoubledRing { group: cr.group, ring, relations, maps, frames }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// `f` placed in factor `k` (0 or 1): `f (x) 1` or `1 (x) f`.
    pub fn copy(&self, f: &SuperScalar, k: usize) -> SuperScalar {
        let x = f.map_variables(&self.ring, |i| Ok(self.ring.v(self.ring.name(self.maps[k][i])))).expect("variable kinds match");
        reduce_all(&x, &self.relations)
    }

    pub fn parse(&self, text: &str) -> SuperScalar {
        reduce_all(&self.ring.p(text), &self.relations)
    }

    /// The product Poisson bracket: each factor carries its own copy of the
    /// structure and the factors Poisson-commute.
    pub fn bracket(&self, p: &PoissonStructure, f: &SuperScalar, g: &SuperScalar) -> SuperScalar {
        let mut out = self.ring.zero();
        for k in 0..2 {
            let pk = p.map_coeffs(|x| self.copy(x, k));
            out = &out + &formula(&self.frames[k], &pk, f, g);
        }
        reduce_all(&out, &self.relations)
    }

    /// A field acting on factor `k` only.
    pub fn field(&self, k: usize, generator: usize, inv: Invariance, side: Side) -> &VectorField {
        self.frames[k].get(generator, inv, side)
    }

    pub fn group(&self) -> Group {
        self.group
    }
}

impl CoordinateRing {
    /// The coproduct as a ring map into [`DoubledRing`].
    pub fn coproduct(&self, doubled: &DoubledRing, f: &SuperScalar) -> SuperScalar {
        let images: Vec<SuperScalar> = (0..self.ring.len()).map(|i| self.coproduct_of_variable(doubled, i)).collect();
        let x = self.reduce(f).map_variables(&doubled.ring, |i| Ok(images[i].clone())).expect("images are in the doubled ring");
        reduce_all(&x, &doubled.relations)
    }

    fn coproduct_of_variable(&self, d: &DoubledRing, i: usize) -> SuperScalar {
        let name = self.ring.name(i);
        match self.group {
            Group::SuperE2 => d.parse(match name {
                "s" => "s_1 + s_2",
                "a" => "a_2 + a_1*E_2^-2 + 1/2*xi_1*xi_2*E_2^-1",
                "b" => "b_2 + b_1*E_2^2 + 1/2*eta_1*eta_2*E_2",
                "xi" => "xi_2 + xi_1*E_2^-1",
                "eta" => "eta_2 + eta_1*E_2",
                "E" => "E_1*E_2",
                _ => "c",
            }),
            Group::Osp12 => {
                const MATRIX: [[&str; 3]; 3] = [["a", "alpha", "b"], ["gamma", "e", "beta"], ["c", "delta", "d"]];
                let (row, col) = match name {
                    "a" => (0, 0),
                    "alpha" => (0, 1),
                    "b" => (0, 2),
                    "c" => (2, 0),
                    "delta" => (2, 1),
                    _ => (2, 2),
                };
                let entry = |r: usize, c: usize| self.ring.p(&fields::expand_osp_macros(MATRIX[r][c]));
                let mut out = d.ring.zero();
                for k in 0..3 {
                    out = &out + &(&d.copy(&entry(row, k), 0) * &d.copy(&entry(k, col), 1));
                }
                reduce_all(&out, &d.relations)
            }
        }
    }
}

/// A Poisson-Lie structure, with all tensors over the coordinate ring.
#[derive(Debug, Clone, PartialEq)]
pub enum PoissonStructure {
    /// Given by a classical r-matrix.
    Coboundary(GradedTensor),
    /// Given by a group cocycle `Phi: G -> g^g`.
    Cocycle(GradedTensor),
    /// A coboundary plus an extra cocycle term.
    Mixed { r: GradedTensor, extra: GradedTensor },
}

impl PoissonStructure {
    pub fn zero(cr: &CoordinateRing) -> Self {
        PoissonStructure::Coboundary(GradedTensor::zero(&cr.ring, 2))
    }

    /// Converts an r-matrix with rational coefficients.
    pub fn coboundary(cr: &CoordinateRing, r: &RMatrix) -> Result<Self, PoissonError> {
        Ok(PoissonStructure::Coboundary(constant_tensor(cr, r)?))
    }

    /// A cocycle, checked to vanish at the identity.
    pub fn cocycle(cr: &CoordinateRing, phi: GradedTensor) -> Result<Self, PoissonError> {
        check_vanishing(cr, &phi)?;
        Ok(PoissonStructure::Cocycle(phi))
    }

    pub fn mixed(cr: &CoordinateRing, r: &RMatrix, extra: GradedTensor) -> Result<Self, PoissonError> {
        check_vanishing(cr, &extra)?;
        Ok(PoissonStructure::Mixed { r: constant_tensor(cr, r)?, extra })
    }

    /// Parses a wedge sum such as `c*s P+^P-` over the coordinate ring.
    pub fn parse_tensor(cr: &CoordinateRing, text: &str) -> Result<GradedTensor, PoissonError> {
        parse_wedge_sum(&cr.algebra, text).map_err(|e| PoissonError::Parse(e.to_string()))
    }

    /// The built-in structures: `r1 r2 r3` (r3 at t = 1) on OSp(1|2),
    /// `i`..`vi` on super-E(2), and `zero` on both.
    pub fn named(cr: &CoordinateRing, name: &str) -> Result<Self, PoissonError> {
        let unknown = || PoissonError::UnknownStructure(name.to_string(), cr.group);
        if name == "zero" || name == "0" {
            return Ok(Self::zero(cr));
        }
        let rmatrix = |id: FamilyId| -> Result<RMatrix, PoissonError> {
            let f = family(&id).map_err(|e| PoissonError::Parse(e.to_string()))?;
            f.rmatrix().cloned().ok_or_else(|| PoissonError::Parse(format!("{id} is not an r-matrix family")))
        };
        match cr.group {
            Group::Osp12 => {
                let id = match name.trim_start_matches('r') {
                    "1" => FamilyId::OspR1,
                    "2" => FamilyId::OspR2,
                    "3" => FamilyId::OspR3 { t: crate::superalgebra::parameter_ring().one() },
                    _ => return Err(unknown()),
                };
                Self::coboundary(cr, &rmatrix(id)?)
            }
            Group::SuperE2 => {
                let extra = || Self::parse_tensor(cr, "c*s P+^P-");
                match name {
                    "i" => Self::cocycle(cr, extra()?),
                    "iv" => Self::cocycle(cr, Self::parse_tensor(cr, PHI_IV)?),
                    "ii" | "iii" | "v" | "vi" => {
                        let n = ["ii", "iii", "", "v", "vi"].iter().position(|&x| x == name).unwrap() as u8 + 2;
                        Self::mixed(cr, &rmatrix(FamilyId::E2R { n })?, extra()?)
                    }
                    _ => Err(unknown()),
                }
            }
        }
    }

    pub fn r(&self) -> Option<&GradedTensor> {
        match self {
            PoissonStructure::Coboundary(r) | PoissonStructure::Mixed { r, .. } => Some(r),
            PoissonStructure::Cocycle(_) => None,
        }
    }

    pub fn phi(&self) -> Option<&GradedTensor> {
        match self {
            PoissonStructure::Cocycle(p) | PoissonStructure::Mixed { extra: p, .. } => Some(p),
            PoissonStructure::Coboundary(_) => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PoissonStructure::Coboundary(_) => "coboundary",
            PoissonStructure::Cocycle(_) => "cocycle",
            PoissonStructure::Mixed { .. } => "mixed",
        }
    }

    /// Substitutes ring values into every coefficient (for example `c = 0`).
    pub fn substitute(&self, bindings: &[(&str, SuperScalar)]) -> Result<Self, PoissonError> {
        let sub = |t: &GradedTensor| t.substitute(bindings).map_err(|e| PoissonError::Parse(e.to_string()));
        Ok(match self {
            PoissonStructure::Coboundary(r) => PoissonStructure::Coboundary(sub(r)?),
            PoissonStructure::Cocycle(p) => PoissonStructure::Cocycle(sub(p)?),
            PoissonStructure::Mixed { r, extra } => PoissonStructure::Mixed { r: sub(r)?, extra: sub(extra)? },
        })
    }

    fn map_coeffs<F: Fn(&SuperScalar) -> SuperScalar>(&self, f: F) -> Self {
        match self {
            PoissonStructure::Coboundary(r) => PoissonStructure::Coboundary(r.map_coeffs(&f)),
            PoissonStructure::Cocycle(p) => PoissonStructure::Cocycle(p.map_coeffs(&f)),
            PoissonStructure::Mixed { r, extra } => PoissonStructure::Mixed { r: r.map_coeffs(&f), extra: extra.map_coeffs(&f) },
        }
    }
}

/// The cocycle of case (iv) at unit scale, with `E = exp(s/2)`.
pub const PHI_IV: &str = "-2*a*E^2 P+^H - a*E^2 D+^D+ - 2*b*E^-2 P-^H + 2*a*b P-^P+ + b*E^-2 D-^D- \
     + xi*E H^D+ - a*xi*E^3 P+^D+ + xi*b*E^-1 P-^D+ + eta*E^-1 H^D- - a*eta*E P+^D- \
     + eta*b*E^-3 P-^D- - 1/2*xi*eta D+^D-";

fn constant_tensor(cr: &CoordinateRing, r: &RMatrix) -> Result<GradedTensor, PoissonError> {
    let mut t = GradedTensor::zero(&cr.ring, 2);
    for (idx, q) in r.tensor().terms() {
        let q = q.as_constant().ok_or_else(|| PoissonError::SymbolicR(q.to_string()))?;
        t.add_term(idx.clone(), cr.ring.constant(q));
    }
    Ok(t)
}

fn check_vanishing(cr: &CoordinateRing, phi: &GradedTensor) -> Result<(), PoissonError> {
    for (idx, q) in phi.terms() {
        let v = cr.at_identity(q);
        if !v.is_zero() {
            let names: Vec<&str> = idx.iter().map(|&i| cr.algebra.basis_name(i)).collect();
            return Err(PoissonError::NotVanishing(format!("coefficient of {} is {v} at the identity", names.join("(x)"))));
        }
    }
    Ok(())
}

/// The bracket formula for one frame, unreduced.
fn formula(frame: &Frame, p: &PoissonStructure, f: &SuperScalar, g: &SuperScalar) -> SuperScalar {
    let ring = f.ring();
    let mut out = ring.zero();
    let (xr, xl) = (frame.apply_all(Invariance::X, Side::Right, f), frame.apply_all(Invariance::X, Side::Left, g));
    if let Some(r) = p.r().filter(|r| !r.is_zero()) {
        let (yr, yl) = (frame.apply_all(Invariance::Y, Side::Right, f), frame.apply_all(Invariance::Y, Side::Left, g));
        for (idx, q) in r.terms() {
            let (k, j) = (idx[0], idx[1]);
            out = &out + &(&(&yr[k] * q) * &yl[j]);
            out = &out - &(&(&xr[k] * q) * &xl[j]);
        }
    }
    if let Some(phi) = p.phi() {
        for (idx, q) in phi.terms() {
            out = &out + &(&(&xr[idx[0]] * q) * &xl[idx[1]]);
        }
    }
    out
}

/// The Poisson bracket `{f, g}`, reduced modulo the relations.
pub fn bracket(cr: &CoordinateRing, p: &PoissonStructure, f: &SuperScalar, g: &SuperScalar) -> SuperScalar {
    cr.reduce(&formula(&cr.frame, p, &cr.reduce(f), &cr.reduce(g)))
}

/// `(-1)^{|f||g|}` for homogeneous elements (zero counts as even).
fn z(f: &SuperScalar, g: &SuperScalar) -> i64 {
    let odd = |x: &SuperScalar| x.parity() == Some(Parity::Odd);
    if odd(f) && odd(g) {
        -1
    } else {
        1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PoissonAxiom {
    Antisymmetry,
    Leibniz,
    Jacobi,
    Coproduct,
}

impl PoissonAxiom {
    pub const ALL: [PoissonAxiom; 4] =
        [PoissonAxiom::Antisymmetry, PoissonAxiom::Leibniz, PoissonAxiom::Jacobi, PoissonAxiom::Coproduct];
}

impl fmt::Display for PoissonAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PoissonAxiom::Antisymmetry => "antisymmetry",
            PoissonAxiom::Leibniz => "leibniz",
            PoissonAxiom::Jacobi => "jacobi",
            PoissonAxiom::Coproduct => "coproduct",
        })
    }
}

#[derive(Debug, Clone)]
pub struct PoissonViolation {
    pub axiom: PoissonAxiom,
    pub inputs: Vec<String>,
    pub residual: String,
}

#[derive(Debug, Clone, Default)]
pub struct PoissonReport {
    pub checked: Vec<(PoissonAxiom, usize)>,
    pub violations: Vec<PoissonViolation>,
}

impl PoissonReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn passes(&self, axiom: PoissonAxiom) -> bool {
        !self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for PoissonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (axiom, n) in &self.checked {
            let bad: Vec<&PoissonViolation> = self.violations.iter().filter(|v| v.axiom == *axiom).collect();
            let status = if bad.is_empty() { "PASS" } else { "FAIL" };
            writeln!(f, "{axiom}\t{status}\t{n} checks, {} violations", bad.len())?;
            for v in bad.iter().take(5) {
                writeln!(f, "  ({}) residual {}", v.inputs.join(", "), v.residual)?;
            }
        }
        Ok(())
    }
}

/// Checks the four Poisson-Lie axioms on the group coordinates: graded
/// antisymmetry and Jacobi on all pairs and triples, Leibniz on all
/// products of two coordinates, and `Delta{f,g} = {Delta f, Delta g}`.
pub fn check_axioms(cr: &CoordinateRing, p: &PoissonStructure) -> PoissonReport {
    let coords = cr.coordinates();
    let names: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    let n = coords.len();
    let br = |f: &SuperScalar, g: &SuperScalar| bracket(cr, p, f, g);
    let table: Vec<Vec<SuperScalar>> = coords.iter().map(|f| coords.iter().map(|g| br(f, g)).collect()).collect();
    let mut report = PoissonReport::default();
    let record = |report: &mut PoissonReport, axiom, inputs: Vec<String>, residual: SuperScalar| {
        if !residual.is_zero() {
            report.violations.push(PoissonViolation { axiom, inputs, residual: residual.to_string() });
        }
    };

    let mut count = 0;
    for i in 0..n {
        for j in 0..n {
            count += 1;
            let res = &table[i][j] + &table[j][i].scale_int(z(&coords[i], &coords[j]));
            record(&mut report, PoissonAxiom::Antisymmetry, vec![names[i].clone(), names[j].clone()], cr.reduce(&res));
        }
    }
    report.checked.push((PoissonAxiom::Antisymmetry, count));

    count = 0;
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                count += 1;
                let (f, g, h) = (&coords[i], &coords[j], &coords[k]);
                let lhs = br(f, &(g * h));
                let rhs = &(&table[i][j] * h) + &(g * &table[i][k]).scale_int(z(f, g));
                record(&mut report, PoissonAxiom::Leibniz, vec![names[i].clone(), format!("{}*{}", names[j], names[k])], cr.reduce(&(&lhs - &rhs)));
            }
        }
    }
    report.checked.push((PoissonAxiom::Leibniz, count));

    count = 0;
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                count += 1;
                let (f, g, h) = (&coords[i], &coords[j], &coords[k]);
                let t1 = br(f, &table[j][k]).scale_int(z(f, h));
                let t2 = br(g, &table[k][i]).scale_int(z(g, f));
                let t3 = br(h, &table[i][j]).scale_int(z(h, g));
                record(
                    &mut report,
                    PoissonAxiom::Jacobi,
                    vec![names[i].clone(), names[j].clone(), names[k].clone()],
                    cr.reduce(&(&(&t1 + &t2) + &t3)),
                );
            }
        }
    }
    report.checked.push((PoissonAxiom::Jacobi, count));

    count = 0;
    let d = cr.doubled();
    let delta: Vec<SuperScalar> = coords.iter().map(|c| cr.coproduct(&d, c)).collect();
    for i in 0..n {
        for j in i..n {
            count += 1;
            let lhs = cr.coproduct(&d, &table[i][j]);
            let rhs = d.bracket(p, &delta[i], &delta[j]);
            record(&mut report, PoissonAxiom::Coproduct, vec![names[i].clone(), names[j].clone()], &lhs - &rhs);
        }
    }
    report.checked.push((PoissonAxiom::Coproduct, count));
    report
}

/// One row of a bracket table.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketRow {
    pub left: String,
    pub right: String,
    pub value: SuperScalar,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BracketTable {
    pub rows: Vec<BracketRow>,
}

impl BracketTable {
    pub fn get(&self, left: &str, right: &str) -> Option<&SuperScalar> {
        self.rows.iter().find(|r| r.left == left && r.right == right).map(|r| &r.value)
    }

    /// Every value multiplied by `q`.
    pub fn scaled(&self, q: &Rational) -> BracketTable {
        BracketTable { rows: self.rows.iter().map(|r| BracketRow { value: r.value.scale(q), ..r.clone() }).collect() }
    }

    /// Rows whose value does not vanish at the identity.
    pub fn nonvanishing(&self, cr: &CoordinateRing) -> Vec<&BracketRow> {
        self.rows.iter().filter(|r| !cr.at_identity(&r.value).is_zero()).collect()
    }
}

impl fmt::Display for BracketTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{{{},{}}} = {}", r.left, r.right, r.value)?;
        }
        Ok(())
    }
}

/// Brackets of all generator pairs `{g_i, g_j}` with `i < j`, plus the
/// diagonal for odd generators.
pub fn render_table(cr: &CoordinateRing, p: &PoissonStructure) -> BracketTable {
    let gens = &cr.generators;
    let mut rows = Vec::new();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let (f, g) = (&gens[i].1, &gens[j].1);
            if i == j && f.parity() != Some(Parity::Odd) {
                continue;
            }
            rows.push(BracketRow { left: gens[i].0.clone(), right: gens[j].0.clone(), value: bracket(cr, p, f, g) });
        }
    }
    BracketTable { rows }
}
