//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any clause departs from its recorded state: a clause fails
//! that is not listed in [`KNOWN_RED`], or a listed clause starts passing.

#[path = "support/properties.rs"]
mod properties;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use superbialg::bialgebra::{check_cobracket, cybe_status, family, CoAxiom, CybeStatus, Family, FamilyId};
use superbialg::cocycle_solver::{self, linalg};
use superbialg::equivalence::verify_orbit_claims;
use superbialg::poissonlie::tables::{compare_column, reference_columns};
use superbialg::poissonlie::{check_axioms, render_table, CoordinateRing, Group, PoissonStructure};
use superbialg::superalgebra::{osp12, super_e2, SuperLieAlgebra};
use superbialg::superscalar::Rational;

/// Clauses that cannot hold as stated, with the computed reason.
const KNOWN_RED: &[(&str, &str)] = &[(
    "osp-r2 is mCYBE-only",
    "the Schouten bracket of r2 vanishes identically, so r2 satisfies the unmodified CYBE; \
     see ERRATA.md",
)];

struct Clause {
    name: String,
    ok: bool,
    detail: String,
}

fn clause(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Clause {
    Clause { name: name.into(), ok, detail: detail.into() }
}

fn fam(name: &str, params: &str) -> Family {
    family(&FamilyId::parse(name, params).expect("known family")).expect("constructible")
}

fn cobracket_failures(f: &Family) -> Vec<CoAxiom> {
    check_cobracket(&f.algebra, &f.cobracket(), &f.relations).failing()
}

fn builtins_validate() -> Vec<Clause> {
    [osp12(), super_e2()]
        .into_iter()
        .map(|alg| {
            let report = alg.validate();
            clause(format!("{} validates", alg.name()), report.is_ok(), if report.is_ok() { "zero residuals".into() } else { report.to_string() })
        })
        .collect()
}

fn coboundary_families() -> Vec<Clause> {
    let mut out = Vec::new();
    for name in ["osp-r1", "osp-r2", "osp-r3", "e2-r-ii", "e2-r-iii", "e2-r-v", "e2-r-vi"] {
        let f = fam(name, "");
        let failing = cobracket_failures(&f);
        out.push(clause(format!("{name} coboundary is a bialgebra"), failing.is_empty(), format!("failing axioms {failing:?}")));
    }
    let r3 = fam("osp-r3", "");
    let ring = r3.algebra.ring();
    let at = |t: i64| r3.cobracket().substitute(&[("t", ring.int(t))]).expect("t is a parameter");
    out.push(clause("osp-r3 is checked with t symbolic", at(0) != at(1), "t does not enter the cobracket"));
    out
}

fn non_coboundary_cases() -> Vec<Clause> {
    let mut out = Vec::new();
    for branch in ["+", "-"] {
        let failing = cobracket_failures(&fam("e2-case-A", &format!("branch={branch}")));
        out.push(clause(format!("case A branch {branch} passes"), failing.is_empty(), format!("failing axioms {failing:?}")));
    }
    let generic = fam("e2-case-B", "");
    let report = check_cobracket(&generic.algebra, &generic.cobracket(), &generic.relations);
    out.push(clause(
        "generic case B fails only co-Jacobi",
        report.failing() == vec![CoAxiom::CoJacobi],
        format!("failing axioms {:?}", report.failing()),
    ));
    let cd = generic.algebra.ring().p("c*d");
    let (cd, _) = cd.as_monomial().expect("a monomial");
    let residuals: Vec<_> = report.failures(CoAxiom::CoJacobi).collect();
    let bad: Vec<String> = residuals.iter().filter(|v| !v.residual.divisible_by_monomial(cd)).map(|v| v.residual.to_string()).collect();
    out.push(clause(
        format!("all {} case B residuals are divisible by cd", residuals.len()),
        !residuals.is_empty() && bad.is_empty(),
        bad.join("; "),
    ));
    for p in ["c=0", "d=0"] {
        let failing = cobracket_failures(&fam("e2-case-B", p));
        out.push(clause(format!("case B with {p} passes"), failing.is_empty(), format!("failing axioms {failing:?}")));
    }
    out
}

fn cybe_classification() -> Vec<Clause> {
    let expected = [
        ("e2-r-ii", CybeStatus::Cybe),
        ("e2-r-iii", CybeStatus::ModifiedOnly),
        ("e2-r-v", CybeStatus::Cybe),
        ("e2-r-vi", CybeStatus::ModifiedOnly),
        ("osp-r1", CybeStatus::Cybe),
        ("osp-r2", CybeStatus::ModifiedOnly),
        ("osp-r3", CybeStatus::ModifiedOnly),
    ];
    expected
        .into_iter()
        .map(|(name, want)| {
            let f = fam(name, "");
            let got = cybe_status(&f.algebra, f.rmatrix().expect("r-matrix family"), &f.relations);
            clause(format!("{name} is {want}"), got == want, format!("computed {got}"))
        })
        .collect()
}

fn constant_coordinates(alg: &SuperLieAlgebra) -> Vec<Vec<Rational>> {
    cocycle_solver::coboundary_space(alg)
        .iter()
        .map(|d| {
            cocycle_solver::coordinates(alg, d)
                .expect("coordinates")
                .iter()
                .map(|x| x.as_constant().expect("constant coboundary"))
                .collect()
        })
        .collect()
}

fn coboundary_completeness() -> Vec<Clause> {
    let mut out = Vec::new();
    for (alg, nullity, span) in [(osp12(), 6, 6), (super_e2(), 7, 5)] {
        let fam = cocycle_solver::solve(&alg).expect("solvable");
        let cob = constant_coordinates(&alg);
        let rank = linalg::independent_subset(&cob).len();
        let name = alg.name().to_string();
        out.push(clause(
            format!("{name}: nullity {nullity}, coboundary span {span}"),
            fam.nullity() == nullity && rank == span,
            format!("computed nullity {}, coboundary span {rank}", fam.nullity()),
        ));
        let cob_in_null = cob.iter().all(|v| linalg::in_span(&fam.basis, v));
        out.push(clause(format!("{name}: coboundaries are cocycles"), cob_in_null, "a coboundary lies outside the nullspace"));
        let null_in_cob = fam.basis.iter().all(|v| linalg::in_span(&cob, v));
        let (label, want) = if span == nullity { ("cocycles are coboundaries", true) } else { ("coboundaries form a proper subspace", false) };
        out.push(clause(format!("{name}: {label}"), null_in_cob == want, format!("every cocycle a coboundary: {null_in_cob}")));
    }
    out
}

fn orbit_claims() -> Vec<Clause> {
    let claims = verify_orbit_claims();
    let group = |name: &str, pick: &dyn Fn(&superbialg::equivalence::OrbitClaim) -> bool| {
        let chosen: Vec<_> = claims.iter().filter(|c| pick(c)).collect();
        let bad: Vec<String> = chosen.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
        clause(format!("{name} ({} witnesses)", chosen.len()), !chosen.is_empty() && bad.is_empty(), bad.join("; "))
    };
    let mut out = vec![
        group("congruence law under ad-bc=1", &|c| c.id == "osp.congruence"),
        group("r_a to r2 on x^2-yz=0", &|c| c.id.starts_with("osp.r_a") && c.statement.ends_with("~ r2")),
        group("r_a to r3 on x^2-yz!=0", &|c| c.id.starts_with("osp.r_a") && c.statement.contains("~ r3")),
        group("r_b to r1", &|c| c.id.starts_with("osp.r_b")),
    ];
    for n in ["i", "ii", "iii", "iv", "v", "vi"] {
        let target = format!("~ e2-case-{n}(");
        out.push(group(&format!("case A/B reduces to family ({n})"), &|c| c.id.starts_with("e2.") && c.statement.contains(&target)));
    }
    out
}

fn table_clauses(group: Group, rows: usize) -> Vec<Clause> {
    let cr = CoordinateRing::new(group);
    let mut out = Vec::new();
    for col in reference_columns(group) {
        let cells = compare_column(&cr, &col).expect("named structure");
        let unlisted: Vec<String> = cells.iter().filter(|c| !c.is_match() && c.erratum.is_none()).map(|c| c.to_string()).collect();
        out.push(clause(
            format!("table {} column {}: {} rows match or are listed errata", col.table, col.label, cells.len()),
            cells.len() == rows && unlisted.is_empty(),
            unlisted.join("; "),
        ));
        for cell in cells.iter().filter(|c| !c.is_match()) {
            let Some(e) = cell.erratum else { continue };
            let corrected = cr.parse(e.corrected).map(|v| v == cell.computed).unwrap_or(false);
            out.push(clause(
                format!("erratum {{{},{}}} in column {}: printed `{}`, recomputed `{}`", e.left, e.right, e.column, e.printed, cell.computed),
                corrected,
                "the logged correction differs from the recomputation",
            ));
        }
    }
    out
}

fn table_one() -> Vec<Clause> {
    table_clauses(Group::Osp12, 17)
}

fn table_two() -> Vec<Clause> {
    let mut out = table_clauses(Group::SuperE2, 12);
    let cr = CoordinateRing::super_e2();
    let v = &reference_columns(Group::SuperE2)[4];
    let flagged: Vec<_> =
        compare_column(&cr, v).expect("named structure").into_iter().filter(|c| !c.is_match() && c.printed_nonzero_at_identity).collect();
    out.push(clause(
        "column (v) {a,b} fails vanishing at the identity",
        flagged.len() == 1 && flagged[0].left == "a" && flagged[0].right == "b",
        format!("{} cells flagged", flagged.len()),
    ));
    let report = check_axioms(&cr, &PoissonStructure::named(&cr, "v").expect("named"));
    out.push(clause("recomputed column (v) satisfies the Poisson-Lie axioms", report.is_ok(), report.to_string()));
    out
}

fn poisson_axioms() -> Vec<Clause> {
    let mut out = Vec::new();
    for group in [Group::Osp12, Group::SuperE2] {
        let cr = CoordinateRing::new(group);
        for name in group.structure_names() {
            let p = PoissonStructure::named(&cr, name).expect("named");
            let report = check_axioms(&cr, &p);
            let checks: usize = report.checked.iter().map(|(_, n)| n).sum();
            let vanishing = render_table(&cr, &p).nonvanishing(&cr).is_empty();
            out.push(clause(
                format!("{group} {name}: {checks} identities, vanishing at the identity"),
                report.is_ok() && vanishing,
                report.to_string(),
            ));
        }
    }
    out
}

fn property_suites() -> Vec<Clause> {
    properties::ALL
        .iter()
        .map(|(name, cases, run)| {
            let result = run();
            clause(format!("{name} ({cases} cases)"), result.is_ok(), result.err().unwrap_or_default())
        })
        .collect()
}

type Criterion = (u8, &'static str, fn() -> Vec<Clause>);

const CRITERIA: &[Criterion] = &[
    (1, "built-in algebras satisfy the axioms", builtins_validate),
    (2, "coboundary families are bialgebras", coboundary_families),
    (3, "non-coboundary cases A and B", non_coboundary_cases),
    (4, "CYBE classification", cybe_classification),
    (5, "coboundary completeness", coboundary_completeness),
    (6, "orbit claims", orbit_claims),
    (7, "OSp(1|2) bracket table", table_one),
    (8, "super-E(2) bracket table", table_two),
    (9, "Poisson-Lie axioms for all nine structures", poisson_axioms),
    (10, "property suites", property_suites),
];

fn main() {
    let mut surprises = Vec::new();
    let mut met = 0;
    for (n, title, check) in CRITERIA {
        let start = Instant::now();
        let clauses = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| vec![clause("checks ran to completion", false, "panicked")]);
        let ms = start.elapsed().as_millis();
        let failing: Vec<&Clause> = clauses.iter().filter(|c| !c.ok).collect();
        let verdict = if failing.is_empty() { "PASS" } else { "FAIL" };
        met += usize::from(failing.is_empty());
        println!("criterion {n:>2}  {verdict}  {title} ({}/{} clauses, {ms} ms)", clauses.len() - failing.len(), clauses.len());
        for c in &clauses {
            let known = KNOWN_RED.iter().find(|(name, _)| *name == c.name);
            match (c.ok, known) {
                (true, None) => println!("    ok    {}", c.name),
                (false, Some((_, why))) => println!("    FAIL  {}: {} [known: {why}]", c.name, c.detail),
                (false, None) => {
                    println!("    FAIL  {}: {}", c.name, c.detail);
                    surprises.push(format!("criterion {n}: {} failed", c.name));
                }
                (true, Some(_)) => {
                    println!("    ok    {} [listed as known red]", c.name);
                    surprises.push(format!("criterion {n}: {} now passes; update the known-red list", c.name));
                }
            }
        }
    }
    println!("{met}/{} criteria met; {} known-red clause(s)", CRITERIA.len(), KNOWN_RED.len());
    if !surprises.is_empty() {
        for s in &surprises {
            println!("unexpected: {s}");
        }
        std::process::exit(1);
    }
}
