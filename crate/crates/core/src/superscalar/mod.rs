//! Exact arithmetic in a supercommutative coefficient ring.
//!
//! A [`Ring`] is fixed by an ordered [`VariableTable`] holding three kinds of
//! variables: ordinary commuting ones, Laurent ones (any integer exponent,
//! used for `E = exp(s/2)`), and Grassmann generators. Elements are
//! [`SuperScalar`]s with exact rational coefficients, kept in a canonical
//! form: one entry per monomial, no zero coefficients, and every Grassmann
//! factor sorted into table order with the accumulated sign.

mod parse;
mod relation;

pub use relation::{reduce_all, reduce_mod_relation, Relation};

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational coefficients.
pub type Rational = BigRational;

/// Builds a rational from a numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("ring mismatch: operands live over different variable tables")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
}

/// Z2 grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> usize {
        self as usize
    }

    pub fn sum(self, other: Parity) -> Parity {
        Parity::from_count(self.bit() + other.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Koszul sign `(-1)^{|p||q|}` as `+1`/`-1`.
pub fn koszul(p: Parity, q: Parity) -> i64 {
    if p.is_odd() && q.is_odd() {
        -1
    } else {
        1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    Commuting,
    Laurent,
    Grassmann,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

impl Variable {
    pub fn commuting(name: &str) -> Self {
        Variable { name: name.to_string(), kind: VarKind::Commuting }
    }

    pub fn laurent(name: &str) -> Self {
        Variable { name: name.to_string(), kind: VarKind::Laurent }
    }

    pub fn grassmann(name: &str) -> Self {
        Variable { name: name.to_string(), kind: VarKind::Grassmann }
    }
}

/// Ordered list of variables; the order is the Grassmann normal order.
#[derive(Debug)]
pub struct VariableTable {
    vars: Vec<Variable>,
    index: HashMap<String, usize>,
}

impl VariableTable {
    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }
}

/// Shared handle to a variable table.
#[derive(Clone)]
pub struct Ring(Arc<VariableTable>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vars == other.0.vars
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.vars.iter().map(|v| v.name.as_str()).collect();
        write!(f, "Ring{names:?}")
    }
}

impl Ring {
    pub fn new(vars: Vec<Variable>) -> Result<Ring, ScalarError> {
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            if !is_ident(&v.name) {
                return Err(ScalarError::Parse { col: 0, msg: format!("bad variable name `{}`", v.name) });
            }
            if index.insert(v.name.clone(), i).is_some() {
                return Err(ScalarError::DuplicateVariable(v.name.clone()));
            }
        }
        Ok(Ring(Arc::new(VariableTable { vars, index })))
    }

    /// Convenience constructor: commuting names, Laurent names, Grassmann names,
    /// in that order.
    pub fn with_names(commuting: &[&str], laurent: &[&str], grassmann: &[&str]) -> Result<Ring, ScalarError> {
        let vars = commuting
            .iter()
            .map(|n| Variable::commuting(n))
            .chain(laurent.iter().map(|n| Variable::laurent(n)))
            .chain(grassmann.iter().map(|n| Variable::grassmann(n)))
            .collect();
        Ring::new(vars)
    }

    /// A new ring with `extra` appended after the existing variables.
    pub fn extend(&self, extra: Vec<Variable>) -> Result<Ring, ScalarError> {
        let mut vars = self.0.vars.clone();
        vars.extend(extra);
        Ring::new(vars)
    }

    pub fn table(&self) -> &VariableTable {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.vars.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize, ScalarError> {
        self.0.index.get(name).copied().ok_or_else(|| ScalarError::UnknownVariable(name.to_string()))
    }

    pub fn has(&self, name: &str) -> bool {
        self.0.index.contains_key(name)
    }

    pub fn kind(&self, i: usize) -> VarKind {
        self.0.vars[i].kind
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.vars[i].name
    }

    pub fn zero(&self) -> SuperScalar {
        SuperScalar { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> SuperScalar {
        self.constant(Rational::one())
    }

    pub fn constant(&self, q: Rational) -> SuperScalar {
        let mut s = self.zero();
        if !q.is_zero() {
            s.terms.insert(Monomial::unit(self.len()), q);
        }
        s
    }

    pub fn int(&self, n: i64) -> SuperScalar {
        self.constant(int(n))
    }

    pub fn rat(&self, num: i64, den: i64) -> SuperScalar {
        self.constant(rat(num, den))
    }

    /// The variable `name` as a ring element.
    pub fn var(&self, name: &str) -> Result<SuperScalar, ScalarError> {
        let i = self.index_of(name)?;
        let mut m = Monomial::unit(self.len());
        m.0[i] = 1;
        Ok(SuperScalar::from_term(self, m, Rational::one()))
    }

    /// Like [`Ring::var`] but panics on unknown names; for hard-coded tables.
    pub fn v(&self, name: &str) -> SuperScalar {
        self.var(name).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Parses an expression (see the module docs of the parser for the grammar).
    pub fn parse(&self, text: &str) -> Result<SuperScalar, ScalarError> {
        parse::parse_expr(self, text)
    }

    /// Parses an expression known to be well formed.
    pub fn p(&self, text: &str) -> SuperScalar {
        self.parse(text).unwrap_or_else(|e| panic!("`{text}`: {e}"))
    }

    /// Multiplies two monomials, returning the product and whether the
    /// Grassmann reordering flipped the sign; `None` if a Grassmann
    /// generator repeats.
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        let mut out = a.0.clone();
        let mut swaps = 0usize;
        // odd generators of `a` lying after position i
        let mut a_odd_after = 0usize;
        for i in (0..self.len()).rev() {
            if self.kind(i) == VarKind::Grassmann {
                if b.0[i] != 0 {
                    if a.0[i] != 0 {
                        return None;
                    }
                    swaps += a_odd_after;
                    out[i] = 1;
                }
                if a.0[i] != 0 {
                    a_odd_after += 1;
                }
            } else {
                out[i] += b.0[i];
            }
        }
        Some((Monomial(out), swaps % 2 == 1))
    }

    fn grassmann_count(&self, m: &Monomial) -> usize {
        m.0.iter().enumerate().filter(|(i, &e)| e != 0 && self.kind(*i) == VarKind::Grassmann).count()
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() => chars.all(|c| c.is_alphanumeric() || c == '_'),
        _ => false,
    }
}

/// Exponent vector over the variable table. Grassmann entries are 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn unit(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e.unsigned_abs() as i64).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || (a > 0 && b >= a))
    }
}

/// Element of the supercommutative ring in canonical form.
#[derive(Clone)]
pub struct SuperScalar {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for SuperScalar {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for SuperScalar {}

impl fmt::Debug for SuperScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperScalar({self})")
    }
}

impl SuperScalar {
    fn from_term(ring: &Ring, m: Monomial, q: Rational) -> SuperScalar {
        let mut s = ring.zero();
        if !q.is_zero() {
            s.terms.insert(m, q);
        }
        s
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The rational value if the element is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, q) = self.terms.iter().next().unwrap();
                m.is_unit().then(|| q.clone())
            }
            _ => None,
        }
    }

    /// Parity of a homogeneous element (zero counts as even); `None` for
    /// mixed-parity sums.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for m in self.terms.keys() {
            let p = Parity::from_count(self.ring.grassmann_count(m));
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity().is_some()
    }

    /// Splits into (even part, odd part).
    pub fn split_parity(&self) -> (SuperScalar, SuperScalar) {
        let mut even = self.ring.zero();
        let mut odd = self.ring.zero();
        for (m, q) in &self.terms {
            let target = if self.ring.grassmann_count(m).is_multiple_of(2) { &mut even } else { &mut odd };
            target.terms.insert(m.clone(), q.clone());
        }
        (even, odd)
    }

    fn check_ring(&self, other: &SuperScalar) -> Result<(), ScalarError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(ScalarError::RingMismatch)
        }
    }

    fn add_term(&mut self, m: Monomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &SuperScalar) -> Result<SuperScalar, ScalarError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.add_term(m.clone(), q.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SuperScalar) -> Result<SuperScalar, ScalarError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.add_term(m.clone(), -q.clone());
        }
        Ok(out)
    }

    /// Canonical product `self * other`.
    pub fn try_mul(&self, other: &SuperScalar) -> Result<SuperScalar, ScalarError> {
        self.check_ring(other)?;
        let mut out = self.ring.zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                if let Some((m, neg)) = self.ring.mul_monomials(ma, mb) {
                    let q = qa * qb;
                    out.add_term(m, if neg { -q } else { q });
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> SuperScalar {
        if q.is_zero() {
            return self.ring.zero();
        }
        SuperScalar {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> SuperScalar {
        self.scale(&int(n))
    }

    pub fn pow(&self, k: u32) -> SuperScalar {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a single-term element whose monomial involves only Laurent
    /// variables.
    pub fn inverse(&self) -> Result<SuperScalar, ScalarError> {
        if self.terms.len() != 1 {
            return Err(ScalarError::NotInvertible(self.to_string()));
        }
        let (m, q) = self.terms.iter().next().unwrap();
        let mut inv = Monomial::unit(self.ring.len());
        for (i, &e) in m.0.iter().enumerate() {
            if e != 0 {
                if self.ring.kind(i) != VarKind::Laurent {
                    return Err(ScalarError::NotInvertible(self.to_string()));
                }
                inv.0[i] = -e;
            }
        }
        Ok(SuperScalar::from_term(&self.ring, inv, q.recip()))
    }

    /// Integer power, negative exponents allowed for invertible elements.
    pub fn powi(&self, k: i32) -> Result<SuperScalar, ScalarError> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.inverse()?.pow(k.unsigned_abs()))
        }
    }

    /// Simultaneous substitution of variables by ring elements, followed by
    /// normalization. Unbound variables stay as they are.
    pub fn substitute(&self, bindings: &[(&str, SuperScalar)]) -> Result<SuperScalar, ScalarError> {
        let mut map: Vec<Option<&SuperScalar>> = vec![None; self.ring.len()];
        for (name, value) in bindings {
            let i = self.ring.index_of(name)?;
            check_binding_parity(&self.ring, i, value)?;
            map[i] = Some(value);
        }
        let target = match bindings.first() {
            Some((_, v)) => v.ring.clone(),
            None => self.ring.clone(),
        };
        for (_, v) in bindings {
            if v.ring != target {
                return Err(ScalarError::RingMismatch);
            }
        }
        self.map_variables(&target, |i| match map[i] {
            Some(v) => Ok(v.clone()),
            None => {
                let name = self.ring.name(i);
                target.var(name)
            }
        })
    }

    /// Re-expresses the element over `target`, matching variables by name
    /// and kind.
    pub fn embed(&self, target: &Ring) -> Result<SuperScalar, ScalarError> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let mut out = target.zero();
        for (m, q) in &self.terms {
            let mut nm = Monomial::unit(target.len());
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    let j = target.index_of(self.ring.name(i))?;
                    if target.kind(j) != self.ring.kind(i) {
                        return Err(ScalarError::Parity(format!("variable `{}` changes kind", self.ring.name(i))));
                    }
                    nm.0[j] = e;
                }
            }
            // Grassmann order may differ between the tables; rebuild the sign.
            let mut sign_src = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 && self.ring.kind(i) == VarKind::Grassmann {
                    sign_src.push(target.index_of(self.ring.name(i))?);
                }
            }
            let neg = inversions(&sign_src) % 2 == 1;
            out.add_term(nm, if neg { -q.clone() } else { q.clone() });
        }
        Ok(out)
    }

    /// Ring homomorphism determined by images of the variables. Variables
    /// are multiplied in table order, so Grassmann signs follow from the
    /// images.
    pub fn map_variables<F>(&self, target: &Ring, mut image: F) -> Result<SuperScalar, ScalarError>
    where
        F: FnMut(usize) -> Result<SuperScalar, ScalarError>,
    {
        let mut cache: HashMap<(usize, i32), SuperScalar> = HashMap::new();
        let mut images: HashMap<usize, SuperScalar> = HashMap::new();
        let mut out = target.zero();
        for (m, q) in &self.terms {
            let mut acc = target.constant(q.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if let Entry::Vacant(slot) = images.entry(i) {
                    let img = image(i)?;
                    if img.ring != *target {
                        return Err(ScalarError::RingMismatch);
                    }
                    slot.insert(img);
                }
                let factor = match cache.get(&(i, e)) {
                    Some(f) => f.clone(),
                    None => {
                        let f = images[&i].powi(e)?;
                        cache.insert((i, e), f.clone());
                        f
                    }
                };
                acc = &acc * &factor;
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Highest exponent of a variable across terms.
    pub fn degree_in(&self, var: usize) -> i32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// True when some term mentions the variable.
    pub fn mentions(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] != 0)
    }

    /// Rescales so the leading (display-first) coefficient is 1.
    pub fn monic(&self) -> SuperScalar {
        match self.display_terms().first() {
            Some((_, q)) => self.scale(&q.recip()),
            None => self.clone(),
        }
    }

    /// True when `self` is a rational multiple of `other` times some
    /// element, i.e. every term of `self` vanishes after setting any of the
    /// variables of `factor` to zero. Used for divisibility by monomials.
    pub fn divisible_by_monomial(&self, factor: &Monomial) -> bool {
        self.terms.keys().all(|m| factor.divides(m))
    }

    /// Exact quotient by a monomial that divides every term.
    pub fn div_monomial(&self, factor: &Monomial) -> Option<SuperScalar> {
        if !self.divisible_by_monomial(factor) {
            return None;
        }
        let mut out = self.ring.zero();
        for (m, q) in &self.terms {
            let nm = Monomial(m.0.iter().zip(&factor.0).map(|(a, b)| a - b).collect());
            out.terms.insert(nm, q.clone());
        }
        Some(out)
    }

    /// The single monomial of a one-term element.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn display_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        v
    }

    fn render(&self, spaced: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, q)) in self.display_terms().into_iter().enumerate() {
            let neg = q.is_negative();
            let body = render_term(&self.ring, m, &q.abs());
            match (k, neg, spaced) {
                (0, false, _) => {}
                (0, true, _) => out.push('-'),
                (_, false, true) => out.push_str(" + "),
                (_, true, true) => out.push_str(" - "),
                (_, false, false) => out.push('+'),
                (_, true, false) => out.push('-'),
            }
            out.push_str(&body);
        }
        out
    }

    /// Rendering without spaces; multi-term elements are parenthesized so the
    /// result can be embedded as a single token.
    pub fn compact(&self) -> String {
        let s = self.render(false);
        if self.terms.len() > 1 {
            format!("({s})")
        } else {
            s
        }
    }
}

fn inversions(v: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                n += 1;
            }
        }
    }
    n
}

fn check_binding_parity(ring: &Ring, i: usize, value: &SuperScalar) -> Result<(), ScalarError> {
    let want = match ring.kind(i) {
        VarKind::Grassmann => Parity::Odd,
        _ => Parity::Even,
    };
    match value.parity() {
        _ if value.is_zero() => Ok(()),
        Some(p) if p == want => Ok(()),
        _ => Err(ScalarError::Parity(format!(
            "`{}` is {} but is bound to `{}`",
            ring.name(i),
            want,
            value
        ))),
    }
}

fn render_term(ring: &Ring, m: &Monomial, q: &Rational) -> String {
    let mut factors: Vec<String> = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = ring.name(i);
        if e == 1 {
            factors.push(name.to_string());
        } else {
            factors.push(format!("{name}^{e}"));
        }
    }
    let coeff = if q.is_integer() { q.numer().to_string() } else { format!("{}/{}", q.numer(), q.denom()) };
    if factors.is_empty() {
        coeff
    } else if q.is_one() {
        factors.join("*")
    } else {
        format!("{coeff}*{}", factors.join("*"))
    }
}

impl fmt::Display for SuperScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&SuperScalar> for &SuperScalar {
            type Output = SuperScalar;
            fn $m(self, rhs: &SuperScalar) -> SuperScalar {
                self.$try(rhs).expect("SuperScalar operands over different rings")
            }
        }
        impl $tr<SuperScalar> for SuperScalar {
            type Output = SuperScalar;
            fn $m(self, rhs: SuperScalar) -> SuperScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&SuperScalar> for SuperScalar {
            type Output = SuperScalar;
            fn $m(self, rhs: &SuperScalar) -> SuperScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<SuperScalar> for &SuperScalar {
            type Output = SuperScalar;
            fn $m(self, rhs: SuperScalar) -> SuperScalar {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &SuperScalar {
    type Output = SuperScalar;
    fn neg(self) -> SuperScalar {
        self.scale(&-Rational::one())
    }
}

impl Neg for SuperScalar {
    type Output = SuperScalar;
    fn neg(self) -> SuperScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::with_names(&["a", "b", "c", "d"], &["E"], &["xi", "eta", "alpha", "delta"]).unwrap()
    }

    #[test]
    fn grassmann_nilpotent() {
        let r = ring();
        let xi = r.v("xi");
        assert!((&xi * &xi).is_zero());
    }

    #[test]
    fn grassmann_anticommute() {
        let r = ring();
        let (xi, eta) = (r.v("xi"), r.v("eta"));
        let p = &xi * &eta;
        assert_eq!(p.num_terms(), 1);
        assert_eq!(&eta * &xi, -&p);
    }

    #[test]
    fn laurent_cancellation() {
        let r = ring();
        let e = r.v("E");
        assert_eq!(&e * &e.inverse().unwrap(), r.one());
    }

    #[test]
    fn sign_of_longer_reordering() {
        let r = ring();
        // delta*alpha*eta*xi has three inversions of order 4 reversed: 6 swaps
        let p = r.p("delta*alpha*eta*xi");
        assert_eq!(p, r.p("xi*eta*alpha*delta"));
        let q = r.p("eta*xi*alpha*delta");
        assert_eq!(q, -r.p("xi*eta*alpha*delta"));
    }

    #[test]
    fn substitution_examples() {
        let r = ring();
        let x = r.p("a^2 - 1");
        assert!(x.substitute(&[("a", r.one())]).unwrap().is_zero());
        let cd = r.p("c*d");
        assert!(cd.substitute(&[("c", r.one()), ("d", r.zero())]).unwrap().is_zero());
        let e2 = r.p("E^2");
        assert_eq!(e2.substitute(&[("E", r.one())]).unwrap(), r.one());
        let em = r.p("E^-3*a");
        assert_eq!(em.substitute(&[("E", r.int(2))]).unwrap(), r.p("1/8*a"));
    }

    #[test]
    fn substitution_rejects_parity_violation() {
        let r = ring();
        let x = r.p("xi*a");
        assert!(matches!(x.substitute(&[("xi", r.v("a"))]), Err(ScalarError::Parity(_))));
        assert!(matches!(x.substitute(&[("a", r.v("eta"))]), Err(ScalarError::Parity(_))));
        assert!(x.substitute(&[("xi", r.zero())]).unwrap().is_zero());
    }

    #[test]
    fn substitution_is_simultaneous() {
        let r = ring();
        let x = r.p("a - b");
        let y = x.substitute(&[("a", r.v("b")), ("b", r.v("a"))]).unwrap();
        assert_eq!(y, r.p("b - a"));
    }

    #[test]
    fn odd_substitution_keeps_order() {
        let r = ring();
        let x = r.p("xi*eta");
        let y = x.substitute(&[("xi", r.v("eta")), ("eta", r.v("xi"))]).unwrap();
        assert_eq!(y, r.p("eta*xi"));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = ring();
        let s = Ring::with_names(&["a"], &[], &[]).unwrap();
        assert_eq!(r.v("a").try_mul(&s.v("a")), Err(ScalarError::RingMismatch));
        assert_eq!(r.v("a").embed(&s).unwrap(), s.v("a"));
    }

    #[test]
    fn parity_of_mixed_sum() {
        let r = ring();
        assert_eq!(r.p("xi*a").parity(), Some(Parity::Odd));
        assert_eq!(r.p("xi*eta + 1").parity(), Some(Parity::Even));
        assert_eq!(r.p("xi + 1").parity(), None);
        assert_eq!(r.zero().parity(), Some(Parity::Even));
    }

    #[test]
    fn display_format() {
        let r = ring();
        let x = r.p("-1/2*a^2*E^-1*xi*eta");
        assert_eq!(x.to_string(), "-1/2*a^2*E^-1*xi*eta");
        assert_eq!(r.p("a^2 - 1").to_string(), "a^2 - 1");
        assert_eq!(r.p("1 - a^2").compact(), "(-a^2+1)");
        assert_eq!(r.zero().to_string(), "0");
    }

    #[test]
    fn duplicate_variable_rejected() {
        assert!(matches!(
            Ring::with_names(&["a", "a"], &[], &[]),
            Err(ScalarError::DuplicateVariable(_))
        ));
    }
}
