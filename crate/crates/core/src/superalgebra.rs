//! Finite-dimensional Lie superalgebras given by structure constants.
//!
//! `[g_i, g_j] = c_ij^k g_k`, stored densely over the `n^3` index cube. The
//! graded bracket covers odd-odd pairs too: there it is the anticommutator.

use std::fmt;

use thiserror::Error;

use crate::cotensor::GradedTensor;
use crate::superscalar::{koszul, Parity, Relation, Ring, ScalarError, SuperScalar, reduce_all};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),
    #[error("duplicate basis element `{0}`")]
    DuplicateBasis(String),
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("operands do not belong to this algebra: {0}")]
    Mismatch(String),
    #[error("axiom check failed:\n{0}")]
    Invalid(AlgebraReport),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub grade: Parity,
}

/// The ring holding every parameter used by the built-in families:
/// commuting `a b c d f m p q t u v x y z` and odd `xi eta`.
pub fn parameter_ring() -> Ring {
    Ring::with_names(
        &["a", "b", "c", "d", "f", "m", "p", "q", "t", "u", "v", "x", "y", "z"],
        &[],
        &["xi", "eta"],
    )
    .expect("static variable table")
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuperLieAlgebra {
    name: String,
    basis: Vec<BasisElement>,
    ring: Ring,
    constants: Vec<SuperScalar>,
}

impl SuperLieAlgebra {
    /// Abelian algebra on the given basis; fill brackets with
    /// [`SuperLieAlgebra::set_bracket`].
    pub fn new(name: &str, basis: Vec<BasisElement>, ring: Ring) -> Result<Self, AlgebraError> {
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].iter().any(|o| o.name == b.name) {
                return Err(AlgebraError::DuplicateBasis(b.name.clone()));
            }
        }
        let n = basis.len();
        Ok(SuperLieAlgebra {
            name: name.to_string(),
            basis,
            constants: vec![ring.zero(); n * n * n],
            ring,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn grade(&self, i: usize) -> Parity {
        self.basis[i].grade
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    /// `z(i,j) = (-1)^{|i||j|}`.
    pub fn z(&self, i: usize, j: usize) -> i64 {
        koszul(self.grade(i), self.grade(j))
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.basis
            .iter()
            .position(|b| b.name == name)
            .ok_or_else(|| AlgebraError::UnknownBasis(name.to_string()))
    }

    /// Index lookup for hard-coded names.
    pub fn idx(&self, name: &str) -> usize {
        self.index_of(name).unwrap_or_else(|e| panic!("{e}"))
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim();
        (i * n + j) * n + k
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &SuperScalar {
        &self.constants[self.slot(i, j, k)]
    }

    /// Raw write of a single constant; no symmetry is implied.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, value: SuperScalar) {
        let s = self.slot(i, j, k);
        self.constants[s] = value;
    }

    /// Sets `[g_i, g_j] = sum coef * g_k` and the graded-antisymmetric
    /// partner `[g_j, g_i]`.
    pub fn set_bracket(&mut self, i: usize, j: usize, rhs: &[(SuperScalar, usize)]) {
        let n = self.dim();
        let mut row = vec![self.ring.zero(); n];
        for (q, k) in rhs {
            row[*k] = &row[*k] + q;
        }
        let sign = -self.z(i, j);
        for (k, q) in row.into_iter().enumerate() {
            let partner = q.scale_int(sign);
            self.set_constant(i, j, k, q);
            self.set_constant(j, i, k, partner);
        }
    }

    /// The same algebra with constants re-expressed over another ring.
    pub fn with_ring(&self, ring: &Ring) -> Result<Self, AlgebraError> {
        let constants = self.constants.iter().map(|c| c.embed(ring)).collect::<Result<Vec<_>, _>>()?;
        Ok(SuperLieAlgebra { name: self.name.clone(), basis: self.basis.clone(), ring: ring.clone(), constants })
    }

    /// Basis vector `g_i` as a rank-1 tensor.
    pub fn element(&self, i: usize) -> GradedTensor {
        GradedTensor::basis(&self.ring, vec![i])
    }

    /// `[g_i, g_j]` as a rank-1 tensor.
    pub fn bracket_basis(&self, i: usize, j: usize) -> GradedTensor {
        let mut t = GradedTensor::zero(&self.ring, 1);
        for k in 0..self.dim() {
            t.add_term(vec![k], self.c(i, j, k).clone());
        }
        t
    }

    /// Bilinear graded bracket of rank-1 tensors with the Koszul rule
    /// `[f x, g y] = (-1)^{|g||x|} f g [x, y]`.
    pub fn bracket(&self, x: &GradedTensor, y: &GradedTensor) -> Result<GradedTensor, AlgebraError> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let mut out = GradedTensor::zero(&self.ring, 1);
        for (ix, fx) in x.terms() {
            for (iy, fy) in y.terms() {
                let (even, odd) = fy.split_parity();
                let sign = if self.grade(ix[0]).is_odd() { -1 } else { 1 };
                let coeff = fx * &(&even + &odd.scale_int(sign));
                if coeff.is_zero() {
                    continue;
                }
                for k in 0..self.dim() {
                    let c = self.c(ix[0], iy[0], k);
                    if !c.is_zero() {
                        out.add_term(vec![k], &coeff * c);
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_vector(&self, x: &GradedTensor) -> Result<(), AlgebraError> {
        if x.rank() != 1 {
            return Err(AlgebraError::Mismatch(format!("expected a rank-1 element, got rank {}", x.rank())));
        }
        if x.ring() != &self.ring {
            return Err(AlgebraError::Mismatch("coefficient ring differs from the algebra's".into()));
        }
        if x.terms().any(|(ix, _)| ix[0] >= self.dim()) {
            return Err(AlgebraError::Mismatch("basis index out of range".into()));
        }
        Ok(())
    }

    /// Checks grading, graded antisymmetry and the super-Jacobi identity.
    pub fn validate(&self) -> AlgebraReport {
        self.validate_mod(&[])
    }

    /// As [`SuperLieAlgebra::validate`], reducing residuals modulo relations
    /// among parameters.
    pub fn validate_mod(&self, relations: &[Relation]) -> AlgebraReport {
        let n = self.dim();
        let mut report = AlgebraReport::default();
        let reduce = |x: SuperScalar| reduce_all(&x, relations);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if self.grade(i).sum(self.grade(j)) != self.grade(k) {
                        let r = reduce(c.clone());
                        if !r.is_zero() {
                            report.push(Axiom::Grading, vec![i, j, k], r);
                        }
                    }
                    let anti = reduce(c + &self.c(j, i, k).scale_int(self.z(i, j)));
                    if !anti.is_zero() {
                        report.push(Axiom::Antisymmetry, vec![i, j, k], anti);
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let mut acc = self.ring.zero();
                        for k in 0..n {
                            acc = acc
                                + (self.c(i, j, k) * self.c(k, l, m)).scale_int(self.z(i, l))
                                + (self.c(j, l, k) * self.c(k, i, m)).scale_int(self.z(j, i))
                                + (self.c(l, i, k) * self.c(k, j, m)).scale_int(self.z(l, j));
                        }
                        let acc = reduce(acc);
                        if !acc.is_zero() {
                            report.push(Axiom::Jacobi, vec![i, j, l, m], acc);
                        }
                    }
                }
            }
        }
        report.names = self.basis.iter().map(|b| b.name.clone()).collect();
        report
    }

    /// Line-based definition file text.
    pub fn render(&self) -> String {
        let mut out = format!("[algebra] name = {}\nbasis =", self.name);
        for b in &self.basis {
            out.push_str(&format!(" {}:{}", b.name, b.grade));
        }
        out.push_str("\n[brackets]\n");
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let terms: Vec<String> = (0..self.dim())
                    .filter(|&k| !self.c(i, j, k).is_zero())
                    .map(|k| format!("{} {}", self.c(i, j, k).compact(), self.basis_name(k)))
                    .collect();
                if !terms.is_empty() {
                    out.push_str(&format!("{} {} = {}\n", self.basis_name(i), self.basis_name(j), terms.join(" ")));
                }
            }
        }
        out
    }

    /// Parses the line-based definition format; constants are read over
    /// `ring`. The result is not validated here.
    pub fn parse(text: &str, ring: &Ring) -> Result<Self, AlgebraError> {
        let syntax = |line: usize, col: usize, msg: &str| AlgebraError::Syntax { line, col, msg: msg.to_string() };
        let mut name: Option<String> = None;
        let mut alg: Option<SuperLieAlgebra> = None;
        let mut in_brackets = false;
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let col_of = |s: &str| raw.find(s).map(|c| c + 1).unwrap_or(1);
            if let Some(rest) = line.strip_prefix("[algebra]") {
                let rest = rest.trim();
                let value = rest
                    .strip_prefix("name")
                    .and_then(|r| r.trim().strip_prefix('='))
                    .map(|r| r.trim())
                    .ok_or_else(|| syntax(ln, col_of("[algebra]"), "expected `[algebra] name = <ident>`"))?;
                if value.is_empty() || value.contains(char::is_whitespace) {
                    return Err(syntax(ln, col_of(value), "bad algebra name"));
                }
                name = Some(value.to_string());
                continue;
            }
            if line == "[brackets]" {
                if alg.is_none() {
                    return Err(syntax(ln, 1, "`[brackets]` before `basis`"));
                }
                in_brackets = true;
                continue;
            }
            if !in_brackets {
                let rest = line
                    .strip_prefix("basis")
                    .and_then(|r| r.trim_start().strip_prefix('='))
                    .ok_or_else(|| syntax(ln, 1, "expected `basis = ...`"))?;
                let mut basis = Vec::new();
                for tok in rest.split_whitespace() {
                    let (n, g) = tok.split_once(':').ok_or_else(|| syntax(ln, col_of(tok), "expected `name:grade`"))?;
                    let grade = match g {
                        "even" => Parity::Even,
                        "odd" => Parity::Odd,
                        _ => return Err(syntax(ln, col_of(tok), "grade must be `even` or `odd`")),
                    };
                    basis.push(BasisElement { name: n.to_string(), grade });
                }
                let nm = name.clone().ok_or_else(|| syntax(ln, 1, "missing `[algebra] name = ...` header"))?;
                alg = Some(SuperLieAlgebra::new(&nm, basis, ring.clone())?);
                continue;
            }
            let a = alg.as_mut().expect("checked above");
            let (lhs, rhs) = line.split_once('=').ok_or_else(|| syntax(ln, 1, "expected `X Y = ...`"))?;
            let lhs: Vec<&str> = lhs.split_whitespace().collect();
            if lhs.len() != 2 {
                return Err(syntax(ln, 1, "left-hand side must name two basis elements"));
            }
            let i = a.index_of(lhs[0]).map_err(|_| syntax(ln, col_of(lhs[0]), "unknown basis element"))?;
            let j = a.index_of(lhs[1]).map_err(|_| syntax(ln, col_of(lhs[1]), "unknown basis element"))?;
            if seen.contains(&(i, j)) || seen.contains(&(j, i)) {
                return Err(syntax(ln, 1, "bracket listed twice"));
            }
            seen.push((i, j));
            let toks: Vec<&str> = rhs.split_whitespace().collect();
            if !toks.len().is_multiple_of(2) || toks.is_empty() {
                return Err(syntax(ln, col_of(rhs.trim()), "right-hand side must be `<coef> <basis>` pairs"));
            }
            let mut terms = Vec::new();
            for pair in toks.chunks(2) {
                let q = ring.parse(pair[0]).map_err(|e| syntax(ln, col_of(pair[0]), &e.to_string()))?;
                let k = a.index_of(pair[1]).map_err(|_| syntax(ln, col_of(pair[1]), "unknown basis element"))?;
                terms.push((q, k));
            }
            a.set_bracket(i, j, &terms);
        }
        alg.ok_or_else(|| syntax(1, 1, "no basis declared"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Grading,
    Antisymmetry,
    Jacobi,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub residual: SuperScalar,
}

/// Every violated identity, not only the first.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AlgebraReport {
    pub violations: Vec<Violation>,
    names: Vec<String>,
}

impl AlgebraReport {
    fn push(&mut self, axiom: Axiom, indices: Vec<usize>, residual: SuperScalar) {
        self.violations.push(Violation { axiom, indices, residual });
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn passes(&self, axiom: Axiom) -> bool {
        !self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn failures(&self, axiom: Axiom) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for axiom in [Axiom::Grading, Axiom::Antisymmetry, Axiom::Jacobi] {
            let n = self.failures(axiom).count();
            writeln!(f, "{:<13} {}", format!("{axiom:?}"), if n == 0 { "pass".to_string() } else { format!("FAIL ({n})") })?;
            for v in self.failures(axiom).take(8) {
                let idx: Vec<&str> = v.indices.iter().map(|&i| self.names.get(i).map(String::as_str).unwrap_or("?")).collect();
                writeln!(f, "  ({}) residual {}", idx.join(","), v.residual)?;
            }
        }
        Ok(())
    }
}

/// Built-in algebras: `osp12` and `super_e2`.
pub fn builtin(name: &str) -> Result<SuperLieAlgebra, AlgebraError> {
    match name {
        "osp12" | "osp" | "osp(1|2)" => Ok(osp12()),
        "super_e2" | "super-e2" | "e2" => Ok(super_e2()),
        other => Err(AlgebraError::UnknownAlgebra(other.to_string())),
    }
}

fn graded_basis(names: &[(&str, Parity)]) -> Vec<BasisElement> {
    names.iter().map(|(n, g)| BasisElement { name: n.to_string(), grade: *g }).collect()
}

/// super-e(2) on (H, P+, P-, D+, D-).
pub fn super_e2() -> SuperLieAlgebra {
    use Parity::*;
    let ring = parameter_ring();
    let basis = graded_basis(&[("H", Even), ("P+", Even), ("P-", Even), ("D+", Odd), ("D-", Odd)]);
    let mut a = SuperLieAlgebra::new("super_e2", basis, ring.clone()).expect("distinct names");
    let (h, pp, pm, dp, dm) = (0, 1, 2, 3, 4);
    a.set_bracket(h, pp, &[(ring.int(1), pp)]);
    a.set_bracket(h, pm, &[(ring.int(-1), pm)]);
    a.set_bracket(h, dp, &[(ring.rat(1, 2), dp)]);
    a.set_bracket(h, dm, &[(ring.rat(-1, 2), dm)]);
    a.set_bracket(dp, dp, &[(ring.int(1), pp)]);
    a.set_bracket(dm, dm, &[(ring.int(1), pm)]);
    a
}

/// osp(1|2) on (H, X+, X-, V+, V-).
pub fn osp12() -> SuperLieAlgebra {
    use Parity::*;
    let ring = parameter_ring();
    let basis = graded_basis(&[("H", Even), ("X+", Even), ("X-", Even), ("V+", Odd), ("V-", Odd)]);
    let mut a = SuperLieAlgebra::new("osp12", basis, ring.clone()).expect("distinct names");
    let (h, xp, xm, vp, vm) = (0, 1, 2, 3, 4);
    a.set_bracket(h, xp, &[(ring.int(1), xp)]);
    a.set_bracket(h, xm, &[(ring.int(-1), xm)]);
    a.set_bracket(h, vp, &[(ring.rat(1, 2), vp)]);
    a.set_bracket(h, vm, &[(ring.rat(-1, 2), vm)]);
    a.set_bracket(xp, xm, &[(ring.int(2), h)]);
    a.set_bracket(vp, vm, &[(ring.rat(-1, 2), h)]);
    a.set_bracket(vp, vp, &[(ring.rat(1, 2), xp)]);
    a.set_bracket(vm, vm, &[(ring.rat(-1, 2), xm)]);
    a.set_bracket(xp, vm, &[(ring.int(1), vp)]);
    a.set_bracket(xm, vp, &[(ring.int(1), vm)]);
    a
}

/// Bundled definition files for the two built-ins.
pub const OSP12_FILE: &str = include_str!("../data/osp12.alg");
pub const SUPER_E2_FILE: &str = include_str!("../data/super_e2.alg");
