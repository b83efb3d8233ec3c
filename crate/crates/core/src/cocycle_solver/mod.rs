//! The linear cocycle system for cobrackets, its exact nullspace, the
//! coboundary span and the quadratic co-Jacobi constraints.

pub mod linalg;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::bialgebra::{coboundary_delta, cocycle_residual, cojacobi_residual, Cobracket};
use crate::cotensor::{wedge, GradedTensor, RMatrix};
use crate::superalgebra::SuperLieAlgebra;
use crate::superscalar::{reduce_all, Rational, Relation, Ring, ScalarError, SuperScalar, Variable};

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("structure constant c({0},{1},{2}) = {3} is not a rational number")]
    NonConstant(usize, usize, usize, String),
    #[error("cobracket has no coordinates: {0}")]
    NotInSpace(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// One independent constant `f_i^{kl}` with `k <= l`; `k == l` only for odd
/// `g_k`, where graded antisymmetry makes the diagonal symmetric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Unknown {
    pub i: usize,
    pub k: usize,
    pub l: usize,
}

impl Unknown {
    /// The cobracket with this unknown set to 1 and all others 0.
    pub fn unit(&self, alg: &SuperLieAlgebra) -> Cobracket {
        let mut d = Cobracket::zero(alg);
        let t = if self.k == self.l {
            GradedTensor::basis(alg.ring(), vec![self.k, self.l])
        } else {
            wedge(alg, self.k, self.l)
        };
        d.set_image(self.i, t);
        d
    }

    pub fn label(&self, alg: &SuperLieAlgebra) -> String {
        format!("f[{}; {},{}]", alg.basis_name(self.i), alg.basis_name(self.k), alg.basis_name(self.l))
    }
}

/// Admissible unknowns in lexicographic `(i, k, l)` order.
pub fn unknowns(alg: &SuperLieAlgebra) -> Vec<Unknown> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for k in 0..n {
            for l in k..n {
                let graded = alg.grade(k).sum(alg.grade(l)) == alg.grade(i);
                if graded && (k < l || alg.grade(k).is_odd()) {
                    out.push(Unknown { i, k, l });
                }
            }
        }
    }
    out
}

/// Coordinates of `d` in the unknown basis. Fails if `d` violates grading
/// or antisymmetry.
pub fn coordinates(alg: &SuperLieAlgebra, d: &Cobracket) -> Result<Vec<SuperScalar>, SolverError> {
    let us = unknowns(alg);
    let coords: Vec<SuperScalar> = us.iter().map(|u| d.f(u.i, u.k, u.l)).collect();
    let mut back = Cobracket::zero(alg);
    for (u, q) in us.iter().zip(&coords) {
        back = back.add(&u.unit(alg).scale(q));
    }
    if back != *d {
        return Err(SolverError::NotInSpace("grading or antisymmetry violated".into()));
    }
    Ok(coords)
}

fn rational_coordinates(alg: &SuperLieAlgebra, d: &Cobracket) -> Result<Vec<Rational>, SolverError> {
    coordinates(alg, d)?
        .into_iter()
        .map(|q| q.as_constant().ok_or_else(|| SolverError::NotInSpace(format!("non-constant coordinate {q}"))))
        .collect()
}

/// Builds a cobracket from rational coordinates.
pub fn from_coordinates(alg: &SuperLieAlgebra, v: &[Rational]) -> Cobracket {
    let mut d = Cobracket::zero(alg);
    for (u, q) in unknowns(alg).iter().zip(v) {
        if !q.is_zero() {
            d = d.add(&u.unit(alg).scale(&alg.ring().constant(q.clone())));
        }
    }
    d
}

/// The cocycle identity as a homogeneous linear system: one row per
/// `(i, j, l, m)` instance, one column per [`Unknown`].
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub unknowns: Vec<Unknown>,
    pub rows: Vec<Vec<Rational>>,
    /// All `(i, j, l, m)` instances, including identically zero ones.
    pub equations: usize,
}

impl LinearSystem {
    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows, self.unknowns.len())
    }

    pub fn nullity(&self) -> usize {
        self.unknowns.len() - self.rank()
    }
}

pub fn build_cocycle_system(alg: &SuperLieAlgebra) -> Result<LinearSystem, SolverError> {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if alg.c(i, j, k).as_constant().is_none() {
                    return Err(SolverError::NonConstant(i, j, k, alg.c(i, j, k).to_string()));
                }
            }
        }
    }
    let us = unknowns(alg);
    // column u holds the residual of the unit cobracket for u
    let columns: Vec<Vec<GradedTensor>> = us
        .iter()
        .map(|u| {
            let d = u.unit(alg);
            (0..n * n).map(|ij| cocycle_residual(alg, &d, ij / n, ij % n)).collect()
        })
        .collect();
    let mut rows = Vec::new();
    for ij in 0..n * n {
        for lm in 0..n * n {
            let idx = [lm / n, lm % n];
            let row: Vec<Rational> =
                columns.iter().map(|col| col[ij].coeff(&idx).as_constant().expect("rational system")).collect();
            if row.iter().any(|q| !q.is_zero()) {
                rows.push(row);
            }
        }
    }
    Ok(LinearSystem { unknowns: us, rows, equations: n.pow(4) })
}

/// The nullspace of the cocycle system: every cobracket satisfying grading,
/// antisymmetry and the cocycle identity is `sum t_j basis_j`.
#[derive(Debug, Clone)]
pub struct SolutionFamily {
    pub unknowns: Vec<Unknown>,
    pub basis: Vec<Vec<Rational>>,
    /// Index of the unknown carried by `t_j`; basis vector `j` is 1 there and
    /// 0 at every other free unknown.
    pub free: Vec<usize>,
}

impl SolutionFamily {
    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_cobrackets(&self, alg: &SuperLieAlgebra) -> Vec<Cobracket> {
        self.basis.iter().map(|v| from_coordinates(alg, v)).collect()
    }

    pub fn parameter_names(&self) -> Vec<String> {
        (1..=self.nullity()).map(|j| format!("t{j}")).collect()
    }

    /// The algebra's ring extended by `t1..tr`.
    pub fn extended_ring(&self, alg: &SuperLieAlgebra) -> Result<Ring, ScalarError> {
        alg.ring().extend(self.parameter_names().iter().map(|n| Variable::commuting(n)).collect())
    }

    /// `sum_j t_j basis_j` over [`Self::extended_ring`].
    pub fn general(&self, alg: &SuperLieAlgebra) -> Result<(SuperLieAlgebra, Cobracket), SolverError> {
        let ring = self.extended_ring(alg)?;
        let ext = alg.with_ring(&ring).map_err(|e| SolverError::NotInSpace(e.to_string()))?;
        let mut d = Cobracket::zero(&ext);
        for (name, b) in self.parameter_names().iter().zip(self.basis_cobrackets(&ext)) {
            d = d.add(&b.scale(&ring.v(name)));
        }
        Ok((ext, d))
    }

    /// Whether a rational cobracket lies in the family.
    pub fn contains(&self, alg: &SuperLieAlgebra, d: &Cobracket) -> bool {
        match rational_coordinates(alg, d) {
            Ok(v) => linalg::in_span(&self.basis, &v),
            Err(_) => false,
        }
    }

    /// The parameter values `t_j` of a (possibly parametric) cobracket,
    /// checked by reconstruction modulo `relations`.
    pub fn point(&self, alg: &SuperLieAlgebra, d: &Cobracket, relations: &[Relation]) -> Result<Vec<SuperScalar>, SolverError> {
        let coords = coordinates(alg, d)?;
        let t: Vec<SuperScalar> = self.free.iter().map(|&f| coords[f].clone()).collect();
        for (c, coord) in coords.iter().enumerate() {
            let mut acc = alg.ring().zero();
            for (tj, b) in t.iter().zip(&self.basis) {
                acc = acc + tj.scale(&b[c]);
            }
            if !reduce_all(&(acc - coord.clone()), relations).is_zero() {
                return Err(SolverError::NotInSpace(format!("coordinate {} not reproduced", self.unknowns[c].label(alg))));
            }
        }
        Ok(t)
    }
}

pub fn solve(alg: &SuperLieAlgebra) -> Result<SolutionFamily, SolverError> {
    let sys = build_cocycle_system(alg)?;
    Ok(solution_from(&sys))
}

fn solution_from(sys: &LinearSystem) -> SolutionFamily {
    let basis = linalg::nullspace(&sys.rows, sys.unknowns.len());
    let free = basis
        .iter()
        .map(|v| {
            (0..v.len())
                .find(|&c| basis.iter().all(|w| std::ptr::eq(w, v) || w[c].is_zero()) && v[c] == num_traits::One::one())
                .expect("unit at a free column")
        })
        .collect();
    SolutionFamily { unknowns: sys.unknowns.clone(), basis, free }
}

/// Nullspace computed after permuting the unknown columns, mapped back to
/// the original ordering.
pub fn nullspace_permuted(sys: &LinearSystem, perm: &[usize]) -> Vec<Vec<Rational>> {
    let permuted: Vec<Vec<Rational>> = sys.rows.iter().map(|row| perm.iter().map(|&p| row[p].clone()).collect()).collect();
    linalg::nullspace(&permuted, perm.len())
        .into_iter()
        .map(|v| {
            let mut out = vec![Rational::zero(); v.len()];
            for (pos, &p) in perm.iter().enumerate() {
                out[p] = v[pos].clone();
            }
            out
        })
        .collect()
}

/// The even r-matrix basis `g_k∧g_l`: even pairs `k < l`, odd pairs `k <= l`.
pub fn rmatrix_basis(alg: &SuperLieAlgebra) -> Vec<(usize, usize)> {
    let n = alg.dim();
    let mut out = Vec::new();
    for k in 0..n {
        for l in k..n {
            if alg.grade(k) == alg.grade(l) && (k < l || alg.grade(k).is_odd()) {
                out.push((k, l));
            }
        }
    }
    out
}

/// A maximal independent set among the coboundaries of the r-matrix basis.
pub fn coboundary_space(alg: &SuperLieAlgebra) -> Vec<Cobracket> {
    let all: Vec<Cobracket> = rmatrix_basis(alg)
        .into_iter()
        .map(|(k, l)| coboundary_delta(alg, &RMatrix::new(alg, wedge(alg, k, l)).expect("even wedge")))
        .collect();
    let coords: Vec<Vec<Rational>> =
        all.iter().map(|d| rational_coordinates(alg, d).expect("coboundaries are graded")).collect();
    linalg::independent_subset(&coords).into_iter().map(|i| all[i].clone()).collect()
}

/// Distinct nonzero co-Jacobi polynomials of the general family element,
/// normalized to be monic.
pub fn cojacobi_constraints(alg: &SuperLieAlgebra, fam: &SolutionFamily) -> Result<(Ring, Vec<SuperScalar>), SolverError> {
    let (ext, d) = fam.general(alg)?;
    let n = alg.dim();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..n {
        for k in 0..n {
            for l in 0..n {
                for m in 0..n {
                    let q = cojacobi_residual(&ext, &d, i, k, l, m);
                    if q.is_zero() {
                        continue;
                    }
                    let q = q.monic();
                    if seen.insert(q.to_string()) {
                        out.push(q);
                    }
                }
            }
        }
    }
    Ok((ext.ring().clone(), out))
}

/// Substitutes a family point into the constraints and reduces; returns the
/// constraints that do not vanish.
pub fn violated_constraints(
    fam: &SolutionFamily,
    ring: &Ring,
    constraints: &[SuperScalar],
    point: &[SuperScalar],
    relations: &[Relation],
) -> Result<Vec<SuperScalar>, SolverError> {
    let names = fam.parameter_names();
    let values: Vec<SuperScalar> = point.iter().map(|p| p.embed(ring)).collect::<Result<_, _>>()?;
    let bindings: Vec<(&str, SuperScalar)> = names.iter().map(String::as_str).zip(values).collect();
    let rels: Vec<Relation> = relations.iter().map(|r| r.embed(ring)).collect::<Result<_, _>>()?;
    let mut bad = Vec::new();
    for c in constraints {
        let v = reduce_all(&c.substitute(&bindings)?, &rels);
        if !v.is_zero() {
            bad.push(v);
        }
    }
    Ok(bad)
}

/// Summary used by the `solve-cocycle` command.
pub struct SolverReport {
    pub algebra: String,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub nullity: usize,
    pub coboundary_dim: usize,
    pub basis: Vec<String>,
    pub constraints: Vec<String>,
}

pub fn report(alg: &SuperLieAlgebra) -> Result<SolverReport, SolverError> {
    let sys = build_cocycle_system(alg)?;
    let fam = solution_from(&sys);
    let (_, constraints) = cojacobi_constraints(alg, &fam)?;
    Ok(SolverReport {
        algebra: alg.name().to_string(),
        unknowns: sys.unknowns.len(),
        equations: sys.equations,
        rank: sys.rank(),
        nullity: fam.nullity(),
        coboundary_dim: coboundary_space(alg).len(),
        basis: fam.basis_cobrackets(alg).iter().map(|d| d.render(alg)).collect(),
        constraints: constraints.iter().map(|c| c.to_string()).collect(),
    })
}

impl fmt::Display for SolverReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra\t{}", self.algebra)?;
        writeln!(f, "unknowns\t{}", self.unknowns)?;
        writeln!(f, "equations\t{}", self.equations)?;
        writeln!(f, "rank\t{}", self.rank)?;
        writeln!(f, "nullity\t{}", self.nullity)?;
        writeln!(f, "coboundary_dim\t{}", self.coboundary_dim)?;
        for (j, b) in self.basis.iter().enumerate() {
            writeln!(f, "basis t{}", j + 1)?;
            for line in b.lines().filter(|l| !l.ends_with("= 0")) {
                writeln!(f, "  {line}")?;
            }
        }
        writeln!(f, "constraints\t{}", self.constraints.len())?;
        for c in &self.constraints {
            writeln!(f, "  {c} = 0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::{osp12, parameter_ring, super_e2, BasisElement};
    use crate::superscalar::Parity;

    #[test]
    fn thirty_unknowns_each() {
        assert_eq!(unknowns(&super_e2()).len(), 30);
        assert_eq!(unknowns(&osp12()).len(), 30);
    }

    #[test]
    fn abelian_algebra_has_zero_matrix() {
        let basis = vec![
            BasisElement { name: "A".into(), grade: Parity::Even },
            BasisElement { name: "B".into(), grade: Parity::Odd },
        ];
        let alg = SuperLieAlgebra::new("abelian", basis, parameter_ring()).unwrap();
        let sys = build_cocycle_system(&alg).unwrap();
        assert!(sys.rows.is_empty());
        assert_eq!(sys.nullity(), sys.unknowns.len());
        assert!(coboundary_space(&alg).is_empty());
    }

    #[test]
    fn coordinates_round_trip() {
        let e = super_e2();
        let d = Cobracket::parse(&e, "delta H = 1 H^P+ + 3 D+^D+\ndelta D- = 2 P+^D-").unwrap();
        let v = rational_coordinates(&e, &d).unwrap();
        assert_eq!(from_coordinates(&e, &v), d);
    }

    #[test]
    fn nullspace_vectors_solve_the_system() {
        for alg in [osp12(), super_e2()] {
            let sys = build_cocycle_system(&alg).unwrap();
            for v in linalg::nullspace(&sys.rows, sys.unknowns.len()) {
                assert!(linalg::apply(&sys.rows, &v).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn zero_cobracket_satisfies_constraints() {
        let e = super_e2();
        let fam = solve(&e).unwrap();
        let (ring, cs) = cojacobi_constraints(&e, &fam).unwrap();
        let point = fam.point(&e, &Cobracket::zero(&e), &[]).unwrap();
        assert!(violated_constraints(&fam, &ring, &cs, &point, &[]).unwrap().is_empty());
    }
}
