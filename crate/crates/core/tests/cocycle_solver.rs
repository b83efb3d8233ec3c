use superbialg::bialgebra::{coboundary_delta, family, FamilyId};
use superbialg::cocycle_solver::{
    build_cocycle_system, coboundary_space, cojacobi_constraints, coordinates, linalg, nullspace_permuted,
    rmatrix_basis, solve, violated_constraints,
};
use superbialg::cotensor::{wedge, RMatrix};
use superbialg::superalgebra::{osp12, super_e2};
use superbialg::superscalar::Rational;

fn rational(v: Vec<superbialg::superscalar::SuperScalar>) -> Vec<Rational> {
    v.into_iter().map(|q| q.as_constant().unwrap()).collect()
}

#[test]
fn frozen_dimensions() {
    // (unknowns, rank, nullity, coboundary span)
    for (alg, expect) in [(osp12(), (30, 24, 6, 6)), (super_e2(), (30, 23, 7, 5))] {
        let sys = build_cocycle_system(&alg).unwrap();
        let got = (sys.unknowns.len(), sys.rank(), sys.nullity(), coboundary_space(&alg).len());
        assert_eq!(got, expect, "{}", alg.name());
    }
}

#[test]
fn osp_cocycles_are_exactly_coboundaries() {
    let alg = osp12();
    let fam = solve(&alg).unwrap();
    let cob: Vec<Vec<Rational>> = coboundary_space(&alg).iter().map(|d| rational(coordinates(&alg, d).unwrap())).collect();
    assert_eq!(cob.len(), fam.nullity());
    for v in &fam.basis {
        assert!(linalg::in_span(&cob, v));
    }
    for v in &cob {
        assert!(linalg::in_span(&fam.basis, v));
    }
}

#[test]
fn every_coboundary_is_a_cocycle() {
    for alg in [osp12(), super_e2()] {
        let fam = solve(&alg).unwrap();
        for (k, l) in rmatrix_basis(&alg) {
            let d = coboundary_delta(&alg, &RMatrix::new(&alg, wedge(&alg, k, l)).unwrap());
            assert!(fam.contains(&alg, &d));
        }
    }
}

#[test]
fn column_order_does_not_change_the_space() {
    for alg in [osp12(), super_e2()] {
        let sys = build_cocycle_system(&alg).unwrap();
        let n = sys.unknowns.len();
        let a = linalg::nullspace(&sys.rows, n);
        for perm in [(0..n).rev().collect::<Vec<_>>(), (0..n).map(|i| (7 * i + 3) % n).collect()] {
            let b = nullspace_permuted(&sys, &perm);
            assert_eq!(a.len(), b.len());
            assert!(b.iter().all(|v| linalg::in_span(&a, v)));
            assert!(a.iter().all(|v| linalg::in_span(&b, v)));
        }
    }
}

#[test]
fn super_e2_family_points() {
    let alg = super_e2();
    let fam = solve(&alg).unwrap();
    let (ring, cs) = cojacobi_constraints(&alg, &fam).unwrap();
    let check = |name: &str, params: &str| {
        let f = family(&FamilyId::parse(name, params).unwrap()).unwrap();
        let point = fam.point(&alg, &f.cobracket(), &f.relations).unwrap();
        violated_constraints(&fam, &ring, &cs, &point, &f.relations).unwrap()
    };
    assert!(check("e2-case-A", "").is_empty());
    assert!(check("e2-case-A", "branch=-").is_empty());
    assert!(!check("e2-case-B", "c=1,d=1").is_empty());
    assert!(check("e2-case-B", "d=0").is_empty());
    assert!(check("e2-case-B", "c=0").is_empty());
    let ring_p = alg.ring();
    let cd = (ring_p.v("c") * ring_p.v("d")).as_monomial().unwrap().0.clone();
    let generic = check("e2-case-B", "");
    assert!(!generic.is_empty());
    for v in generic {
        let v = v.embed(ring_p).unwrap();
        assert!(v.divisible_by_monomial(&cd), "{v}");
    }
}
