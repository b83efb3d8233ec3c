//! Rewriting modulo a single polynomial relation.
//!
//! The relation `L - rest = 0` is oriented as `L -> rest`, where `L` is the
//! chosen leading monomial. Monomials are compared degree-lexicographically
//! with the variables of `L` ranked highest (last table variable first), so
//! `a*d` leads `a*d - b*c + alpha*delta - 1` and `m^2` leads `m^2 - a*b`.
//! Every rewrite strictly decreases this order, which bounds the loop.

use std::cmp::Ordering;

use num_traits::One;

use super::{Monomial, Parity, Rational, Ring, ScalarError, SuperScalar, VarKind};

#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    poly: SuperScalar,
    leading: Monomial,
    /// `leading - poly`: what one occurrence of `leading` rewrites to.
    replacement: SuperScalar,
}

impl Relation {
    /// Orients `poly = 0` with the given leading monomial (a one-term element
    /// with coefficient 1).
    pub fn new(poly: &SuperScalar, leading: &SuperScalar) -> Result<Relation, ScalarError> {
        let ring = poly.ring().clone();
        if leading.ring() != &ring {
            return Err(ScalarError::RingMismatch);
        }
        if poly.parity() != Some(Parity::Even) {
            return Err(ScalarError::InvalidRelation(format!("`{poly}` is not homogeneous even")));
        }
        let lead = match leading.as_monomial() {
            Some((m, q)) if q.is_one() && !m.is_unit() => m.clone(),
            _ => return Err(ScalarError::InvalidRelation(format!("`{leading}` is not a unit-coefficient monomial"))),
        };
        for (i, &e) in lead.exponents().iter().enumerate() {
            if e != 0 && ring.kind(i) != VarKind::Commuting {
                return Err(ScalarError::InvalidRelation(format!(
                    "leading monomial uses non-commuting variable `{}`",
                    ring.name(i)
                )));
            }
        }
        match poly.terms().find(|(m, _)| **m == lead) {
            Some((_, q)) if q.is_one() => {}
            _ => {
                return Err(ScalarError::InvalidRelation(format!(
                    "`{leading}` does not occur with coefficient 1 in `{poly}`"
                )))
            }
        }
        let order = RankedOrder::new(&ring, &lead);
        for (m, _) in poly.terms() {
            if *m == lead {
                continue;
            }
            if m.exponents().iter().enumerate().any(|(i, &e)| e != 0 && ring.kind(i) == VarKind::Laurent) {
                return Err(ScalarError::InvalidRelation("Laurent variables are not allowed in relations".into()));
            }
            if lead.divides(m) {
                return Err(ScalarError::InvalidRelation(format!("`{leading}` divides another monomial of `{poly}`")));
            }
            if order.cmp(m, &lead) != Ordering::Less {
                return Err(ScalarError::InvalidRelation(format!(
                    "rewriting with `{leading}` would not terminate for `{poly}`"
                )));
            }
        }
        let replacement = leading - poly;
        Ok(Relation { poly: poly.clone(), leading: lead, replacement })
    }

    /// Convenience: parse both the relation and its leading monomial.
    pub fn parse(ring: &Ring, poly: &str, leading: &str) -> Result<Relation, ScalarError> {
        Relation::new(&ring.parse(poly)?, &ring.parse(leading)?)
    }

    pub fn poly(&self) -> &SuperScalar {
        &self.poly
    }

    pub fn ring(&self) -> &Ring {
        self.poly.ring()
    }

    /// The leading monomial as a ring element.
    pub fn leading(&self) -> SuperScalar {
        SuperScalar::from_term(self.ring(), self.leading.clone(), Rational::one())
    }

    /// The same relation over a ring containing this one's variables.
    pub fn embed(&self, ring: &Ring) -> Result<Relation, ScalarError> {
        Relation::new(&self.poly.embed(ring)?, &self.leading().embed(ring)?)
    }

    /// Rewrites every occurrence of the leading monomial until none remains.
    pub fn reduce(&self, x: &SuperScalar) -> Result<SuperScalar, ScalarError> {
        if x.ring() != self.ring() {
            return Err(ScalarError::RingMismatch);
        }
        let ring = self.ring();
        let mut cur = x.clone();
        loop {
            let mut kept = ring.zero();
            let mut rewritten = ring.zero();
            let mut any = false;
            for (m, q) in cur.terms() {
                if self.leading.divides(m) {
                    any = true;
                    // the leading monomial is even and commuting, so the
                    // quotient keeps the Grassmann factor untouched
                    let quotient = SuperScalar::from_term(
                        ring,
                        Monomial(m.0.iter().zip(&self.leading.0).map(|(a, b)| a - b).collect()),
                        q.clone(),
                    );
                    rewritten = &rewritten + &(&quotient * &self.replacement);
                } else {
                    kept.add_term(m.clone(), q.clone());
                }
            }
            if !any {
                return Ok(cur);
            }
            cur = &kept + &rewritten;
        }
    }

    pub fn is_reduced(&self, x: &SuperScalar) -> bool {
        x.terms().all(|(m, _)| !self.leading.divides(m))
    }
}

/// Reduces `x` modulo `relation`, orienting it by `leading`.
pub fn reduce_mod_relation(
    x: &SuperScalar,
    relation: &SuperScalar,
    leading: &SuperScalar,
) -> Result<SuperScalar, ScalarError> {
    Relation::new(relation, leading)?.reduce(x)
}

/// Reduces modulo several relations until stable. Intended for relations in
/// disjoint variables (tensor-square coordinate rings) or otherwise
/// compatible orientations.
pub fn reduce_all(x: &SuperScalar, relations: &[Relation]) -> SuperScalar {
    let mut cur = x.clone();
    loop {
        let mut changed = false;
        for r in relations {
            if !r.is_reduced(&cur) {
                cur = r.reduce(&cur).expect("relation over the element's ring");
                changed = true;
            }
        }
        if !changed {
            return cur;
        }
    }
}

struct RankedOrder {
    rank: Vec<usize>,
}

impl RankedOrder {
    fn new(ring: &Ring, lead: &Monomial) -> Self {
        let mut rank: Vec<usize> = (0..ring.len()).rev().filter(|&i| lead.0[i] != 0).collect();
        rank.extend((0..ring.len()).rev().filter(|&i| lead.0[i] == 0));
        RankedOrder { rank }
    }

    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            for &i in &self.rank {
                match a.0[i].cmp(&b.0[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}
