//! Exact commutative-ring backends.
//!
//! A [`Ring`] is a value describing one of the shipped backends; it performs
//! arithmetic on [`Elem`] values and answers the structural questions the
//! Specker constructions need (idempotents, annihilator witnesses, order).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::boolean_algebra::{BAElement, FiniteBooleanAlgebra};
use crate::error::{Error, Result};

/// Finite rings up to this size are treated exhaustively by [`Ring::classify`].
const EXHAUSTIVE_RING_LIMIT: u128 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    /// Residues modulo `n ≥ 2`.
    Modular(u64),
    Product(Box<Ring>, Box<Ring>),
}

/// A ring element. Which variants are valid depends on the ring; see
/// [`Ring::contains`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    Pair(Box<Elem>, Box<Elem>),
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(n) => write!(f, "{n}"),
            Elem::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Elem::Mod(r) => write!(f, "{r}"),
            Elem::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

/// Structural flags of a ring, each validated at runtime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_indecomposable: bool,
    pub is_domain: bool,
    pub is_weak_baer: bool,
    /// First element whose annihilator has no idempotent generator.
    pub weak_baer_failure: Option<Elem>,
    pub is_totally_ordered: bool,
}

impl Ring {
    pub fn modular(modulus: u64) -> Result<Ring> {
        if modulus < 2 {
            return Err(Error::InvalidArgument(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        Ok(Ring::Modular(modulus))
    }

    pub fn product(left: Ring, right: Ring) -> Ring {
        Ring::Product(Box::new(left), Box::new(right))
    }

    pub fn zero(&self) -> Elem {
        self.from_i64(0)
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    /// Image of an integer under the unique ring map `Z → R`.
    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match self {
            Ring::Integers => Elem::Int(n.clone()),
            Ring::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
            Ring::Modular(m) => Elem::Mod(
                n.mod_floor(&BigInt::from(*m))
                    .to_u64()
                    .expect("residue fits the modulus"),
            ),
            Ring::Product(l, r) => {
                Elem::Pair(Box::new(l.from_bigint(n)), Box::new(r.from_bigint(n)))
            }
        }
    }

    /// Whether `x` is a canonical element of this ring.
    pub fn contains(&self, x: &Elem) -> bool {
        match (self, x) {
            (Ring::Integers, Elem::Int(_)) | (Ring::Rationals, Elem::Rat(_)) => true,
            (Ring::Modular(m), Elem::Mod(r)) => r < m,
            (Ring::Product(l, r), Elem::Pair(a, b)) => l.contains(a) && r.contains(b),
            _ => false,
        }
    }

    pub fn check(&self, x: &Elem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::MixedAlgebras(format!("{x} is not an element of {self}")))
        }
    }

    pub fn is_zero(&self, x: &Elem) -> bool {
        *x == self.zero()
    }

    pub fn add(&self, x: &Elem, y: &Elem) -> Elem {
        match (self, x, y) {
            (Ring::Integers, Elem::Int(a), Elem::Int(b)) => Elem::Int(a + b),
            (Ring::Rationals, Elem::Rat(a), Elem::Rat(b)) => Elem::Rat(a + b),
            (Ring::Modular(m), Elem::Mod(a), Elem::Mod(b)) => {
                Elem::Mod(((*a as u128 + *b as u128) % *m as u128) as u64)
            }
            (Ring::Product(l, r), Elem::Pair(a1, b1), Elem::Pair(a2, b2)) => {
                Elem::Pair(Box::new(l.add(a1, a2)), Box::new(r.add(b1, b2)))
            }
            _ => panic!("add: {x} or {y} not in {self}"),
        }
    }

    pub fn neg(&self, x: &Elem) -> Elem {
        match (self, x) {
            (Ring::Integers, Elem::Int(a)) => Elem::Int(-a),
            (Ring::Rationals, Elem::Rat(a)) => Elem::Rat(-a),
            (Ring::Modular(m), Elem::Mod(a)) => Elem::Mod((m - a) % m),
            (Ring::Product(l, r), Elem::Pair(a, b)) => {
                Elem::Pair(Box::new(l.neg(a)), Box::new(r.neg(b)))
            }
            _ => panic!("neg: {x} not in {self}"),
        }
    }

    pub fn sub(&self, x: &Elem, y: &Elem) -> Elem {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        match (self, x, y) {
            (Ring::Integers, Elem::Int(a), Elem::Int(b)) => Elem::Int(a * b),
            (Ring::Rationals, Elem::Rat(a), Elem::Rat(b)) => Elem::Rat(a * b),
            (Ring::Modular(m), Elem::Mod(a), Elem::Mod(b)) => {
                Elem::Mod(((*a as u128 * *b as u128) % *m as u128) as u64)
            }
            (Ring::Product(l, r), Elem::Pair(a1, b1), Elem::Pair(a2, b2)) => {
                Elem::Pair(Box::new(l.mul(a1, a2)), Box::new(r.mul(b1, b2)))
            }
            _ => panic!("mul: {x} or {y} not in {self}"),
        }
    }

    pub fn is_idempotent(&self, x: &Elem) -> bool {
        self.mul(x, x) == *x
    }

    pub fn is_unit(&self, x: &Elem) -> bool {
        match (self, x) {
            (Ring::Integers, Elem::Int(a)) => a.abs().is_one(),
            (Ring::Rationals, Elem::Rat(a)) => !a.is_zero(),
            (Ring::Modular(m), Elem::Mod(a)) => a.gcd(m) == 1,
            (Ring::Product(l, r), Elem::Pair(a, b)) => l.is_unit(a) && r.is_unit(b),
            _ => false,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }

    /// Number of elements; `None` for infinite rings (or overflow).
    pub fn cardinality(&self) -> Option<u128> {
        match self {
            Ring::Integers | Ring::Rationals => None,
            Ring::Modular(m) => Some(*m as u128),
            Ring::Product(l, r) => l.cardinality()?.checked_mul(r.cardinality()?),
        }
    }

    /// All elements of a finite ring, in canonical order.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        match self {
            Ring::Modular(m) => Ok((0..*m).map(Elem::Mod).collect()),
            Ring::Product(l, r) => {
                let (ls, rs) = (l.elements()?, r.elements()?);
                Ok(ls
                    .iter()
                    .flat_map(|a| {
                        rs.iter()
                            .map(move |b| Elem::Pair(Box::new(a.clone()), Box::new(b.clone())))
                    })
                    .collect())
            }
            _ => Err(Error::UnsupportedCapability(format!(
                "{self} is infinite and cannot be enumerated"
            ))),
        }
    }

    /// All idempotents, in canonical order (residues ascending; pairs lexicographic).
    pub fn idempotents(&self) -> Result<Vec<Elem>> {
        match self {
            Ring::Integers | Ring::Rationals => Ok(vec![self.zero(), self.one()]),
            Ring::Modular(m) => Ok((0..*m)
                .filter(|&r| (r as u128 * r as u128) % *m as u128 == r as u128)
                .map(Elem::Mod)
                .collect()),
            Ring::Product(l, r) => {
                let (ls, rs) = (l.idempotents()?, r.idempotents()?);
                Ok(ls
                    .iter()
                    .flat_map(|a| {
                        rs.iter()
                            .map(move |b| Elem::Pair(Box::new(a.clone()), Box::new(b.clone())))
                    })
                    .collect())
            }
        }
    }

    /// The Boolean algebra `Id(R)` of idempotents.
    pub fn idempotent_algebra(&self) -> Result<RingIdempotents> {
        RingIdempotents::new(self)
    }

    /// Idempotent `b` with `bR = ann(a)`.
    pub fn annihilator_witness(&self, a: &Elem) -> Result<Elem> {
        self.check(a)?;
        match (self, a) {
            (Ring::Integers | Ring::Rationals, _) => Ok(if self.is_zero(a) {
                self.one()
            } else {
                self.zero()
            }),
            (Ring::Modular(_), _) => {
                let all = self.elements()?;
                let killed: Vec<&Elem> = all
                    .iter()
                    .filter(|x| self.is_zero(&self.mul(x, a)))
                    .collect();
                self.idempotents()?
                    .into_iter()
                    .find(|b| {
                        self.is_zero(&self.mul(b, a))
                            && killed.iter().all(|x| self.mul(b, x) == **x)
                    })
                    .ok_or_else(|| Error::NotWeakBaerAt(a.clone()))
            }
            (Ring::Product(l, r), Elem::Pair(x, y)) => {
                let wl = l.annihilator_witness(x).map_err(|_| Error::NotWeakBaerAt(a.clone()))?;
                let wr = r.annihilator_witness(y).map_err(|_| Error::NotWeakBaerAt(a.clone()))?;
                Ok(Elem::Pair(Box::new(wl), Box::new(wr)))
            }
            _ => unreachable!("membership checked above"),
        }
    }

    /// Total-order comparison, for backends that carry one.
    pub fn compare(&self, x: &Elem, y: &Elem) -> Option<Ordering> {
        match (self, x, y) {
            (Ring::Integers, Elem::Int(a), Elem::Int(b)) => Some(a.cmp(b)),
            (Ring::Rationals, Elem::Rat(a), Elem::Rat(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }

    pub fn has_order(&self) -> bool {
        matches!(self, Ring::Integers | Ring::Rationals)
    }

    /// `|a|`, derived from the comparator.
    pub fn abs(&self, a: &Elem) -> Result<Elem> {
        match self.compare(&self.zero(), a) {
            Some(Ordering::Greater) => Ok(self.neg(a)),
            Some(_) => Ok(a.clone()),
            None => Err(Error::UnorderedRing),
        }
    }

    /// Whether the backend declares itself an integral domain.
    pub fn declared_domain(&self) -> bool {
        match self {
            Ring::Integers | Ring::Rationals => true,
            Ring::Modular(m) => is_prime(*m),
            Ring::Product(..) => false,
        }
    }

    /// Deterministic spot-check set: every element of a small finite ring,
    /// otherwise a grid of small values.
    pub fn sample_elements(&self) -> Vec<Elem> {
        if let Some(n) = self.cardinality() {
            if n <= 64 {
                return self.elements().expect("finite ring");
            }
        }
        match self {
            Ring::Integers => (-6..=6).map(|n| self.from_i64(n)).collect(),
            Ring::Rationals => {
                let mut out = Vec::new();
                for q in 1..=3 {
                    for p in -4..=4 {
                        let x = Elem::Rat(BigRational::new(p.into(), BigInt::from(q)));
                        if !out.contains(&x) {
                            out.push(x);
                        }
                    }
                }
                out
            }
            Ring::Modular(m) => {
                let mut out: Vec<Elem> = (0..32).map(Elem::Mod).collect();
                out.extend((m - 32..*m).map(Elem::Mod));
                out
            }
            Ring::Product(l, r) => {
                let (ls, rs) = (l.sample_elements(), r.sample_elements());
                let (ls, rs) = (&ls[..ls.len().min(12)], &rs[..rs.len().min(12)]);
                ls.iter()
                    .flat_map(|a| {
                        rs.iter()
                            .map(move |b| Elem::Pair(Box::new(a.clone()), Box::new(b.clone())))
                    })
                    .collect()
            }
        }
    }

    /// A random element; values of infinite backends are drawn with
    /// numerators and denominators bounded by `bound`.
    pub fn random_element<G: Rng + ?Sized>(&self, rng: &mut G, bound: i64) -> Elem {
        match self {
            Ring::Integers => self.from_i64(rng.gen_range(-bound..=bound)),
            Ring::Rationals => Elem::Rat(BigRational::new(
                rng.gen_range(-bound..=bound).into(),
                rng.gen_range(1..=bound.max(1)).into(),
            )),
            Ring::Modular(m) => Elem::Mod(rng.gen_range(0..*m)),
            Ring::Product(l, r) => Elem::Pair(
                Box::new(l.random_element(rng, bound)),
                Box::new(r.random_element(rng, bound)),
            ),
        }
    }

    /// Weak-Baer check: exhaustive on finite rings, the domain rule on
    /// infinite ones, componentwise on products.
    pub fn weak_baer_failure(&self) -> Result<Option<Elem>> {
        match self {
            Ring::Integers | Ring::Rationals => Ok(None),
            Ring::Modular(_) => {
                for a in self.elements()? {
                    match self.annihilator_witness(&a) {
                        Ok(_) => {}
                        Err(Error::NotWeakBaerAt(x)) => return Ok(Some(x)),
                        Err(e) => return Err(e),
                    }
                }
                Ok(None)
            }
            Ring::Product(l, r) => {
                if let Some(x) = l.weak_baer_failure()? {
                    return Ok(Some(Elem::Pair(Box::new(x), Box::new(r.zero()))));
                }
                if let Some(y) = r.weak_baer_failure()? {
                    return Ok(Some(Elem::Pair(Box::new(l.zero()), Box::new(y))));
                }
                Ok(None)
            }
        }
    }

    /// Classification with runtime validation of the declared flags.
    pub fn classify(&self) -> Result<Classification> {
        let idempotents = self.idempotents()?;
        for e in &idempotents {
            if !self.is_idempotent(e) {
                return Err(Error::InconsistentBackend(format!(
                    "enumerated idempotent {e} is not idempotent"
                )));
            }
        }
        if !idempotents.contains(&self.zero()) || !idempotents.contains(&self.one()) {
            return Err(Error::InconsistentBackend("0 or 1 missing from idempotents".into()));
        }
        let is_indecomposable = idempotents.len() == 2;

        let samples = match self.cardinality() {
            Some(n) if n <= EXHAUSTIVE_RING_LIMIT => self.elements()?,
            _ => self.sample_elements(),
        };
        let has_zero_divisors = samples.iter().any(|a| {
            !self.is_zero(a)
                && samples
                    .iter()
                    .any(|b| !self.is_zero(b) && self.is_zero(&self.mul(a, b)))
        });
        let is_domain = self.declared_domain();
        if is_domain && (has_zero_divisors || !is_indecomposable) {
            return Err(Error::InconsistentBackend(format!(
                "{self} declares itself a domain but has zero divisors"
            )));
        }
        if !is_domain && self.is_finite() && !has_zero_divisors {
            return Err(Error::InconsistentBackend(format!(
                "{self} declares zero divisors but none were found"
            )));
        }

        let is_totally_ordered = self.has_order();
        if is_totally_ordered {
            self.validate_order(&samples)?;
            if !is_indecomposable {
                return Err(Error::InconsistentBackend(
                    "totally ordered ring with a nontrivial idempotent".into(),
                ));
            }
        }

        let weak_baer_failure = self.weak_baer_failure()?;
        Ok(Classification {
            is_indecomposable,
            is_domain,
            is_weak_baer: weak_baer_failure.is_none(),
            weak_baer_failure,
            is_totally_ordered,
        })
    }

    /// Totality, translation invariance and closure of nonnegatives under
    /// products, checked on `samples`.
    pub fn validate_order(&self, samples: &[Elem]) -> Result<()> {
        let zero = self.zero();
        let le = |a: &Elem, b: &Elem| self.compare(a, b).map(|o| o != Ordering::Greater);
        for a in samples {
            for b in samples {
                let ab = le(a, b).ok_or(Error::UnorderedRing)?;
                let ba = le(b, a).ok_or(Error::UnorderedRing)?;
                if !(ab || ba) || (ab && ba && a != b) {
                    return Err(Error::InconsistentBackend("order is not total".into()));
                }
                for c in samples.iter().take(8) {
                    if ab && le(&self.add(a, c), &self.add(b, c)) != Some(true) {
                        return Err(Error::InconsistentBackend(
                            "order is not translation invariant".into(),
                        ));
                    }
                }
                if le(&zero, a) == Some(true)
                    && le(&zero, b) == Some(true)
                    && le(&zero, &self.mul(a, b)) != Some(true)
                {
                    return Err(Error::InconsistentBackend(
                        "product of nonnegatives is negative".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Quotient by the principal ideal generated by `p`, which must be prime.
    pub fn quotient_by_prime(&self, p: &Elem) -> Result<RingQuotient> {
        self.check(p)?;
        let not_prime = || Error::NotPrime(p.clone());
        let kind = match (self, p) {
            (Ring::Integers, Elem::Int(n)) => {
                if n.is_zero() {
                    QuotientKind::Identity
                } else {
                    let m = n.abs().to_u64().filter(|&m| is_prime(m)).ok_or_else(not_prime)?;
                    QuotientKind::IntegersMod(m)
                }
            }
            (Ring::Rationals, Elem::Rat(q)) => {
                if q.is_zero() {
                    QuotientKind::Identity
                } else {
                    return Err(not_prime());
                }
            }
            (Ring::Modular(m), Elem::Mod(r)) => {
                // (r) = (gcd(r, m)) in Z/m, and Z/m / (d) ≅ Z/d
                let d = r.gcd(m);
                if d == *m {
                    if !is_prime(*m) {
                        return Err(not_prime());
                    }
                    QuotientKind::Identity
                } else if is_prime(d) {
                    QuotientKind::Reduce(d)
                } else {
                    return Err(not_prime());
                }
            }
            (Ring::Product(l, r), Elem::Pair(a, b)) => {
                if l.is_unit(a) {
                    QuotientKind::Right(Box::new(r.quotient_by_prime(b).map_err(|_| not_prime())?))
                } else if r.is_unit(b) {
                    QuotientKind::Left(Box::new(l.quotient_by_prime(a).map_err(|_| not_prime())?))
                } else {
                    return Err(not_prime());
                }
            }
            _ => unreachable!("membership checked above"),
        };
        let target = match &kind {
            QuotientKind::Identity => self.clone(),
            QuotientKind::IntegersMod(m) | QuotientKind::Reduce(m) => Ring::Modular(*m),
            QuotientKind::Left(q) | QuotientKind::Right(q) => q.target.clone(),
        };
        Ok(RingQuotient {
            source: self.clone(),
            target,
            kind,
        })
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::Modular(m) => write!(f, "Z/{m}"),
            Ring::Product(l, r) => write!(f, "({l} x {r})"),
        }
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum QuotientKind {
    Identity,
    IntegersMod(u64),
    Reduce(u64),
    Left(Box<RingQuotient>),
    Right(Box<RingQuotient>),
}

/// The quotient map `R → R/P` for a principal prime `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingQuotient {
    source: Ring,
    target: Ring,
    kind: QuotientKind,
}

impl RingQuotient {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn reduce(&self, x: &Elem) -> Elem {
        match (&self.kind, x) {
            (QuotientKind::Identity, _) => x.clone(),
            (QuotientKind::IntegersMod(_), Elem::Int(n)) => self.target.from_bigint(n),
            (QuotientKind::Reduce(d), Elem::Mod(r)) => Elem::Mod(r % d),
            (QuotientKind::Left(q), Elem::Pair(a, _)) => q.reduce(a),
            (QuotientKind::Right(q), Elem::Pair(_, b)) => q.reduce(b),
            _ => panic!("reduce: {x} not in {}", self.source),
        }
    }
}

/// The idempotents of a ring viewed as a finite Boolean algebra, with
/// `e ∨ f = e + f − ef`, `e ∧ f = ef`, `¬e = 1 − e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingIdempotents {
    ring: Ring,
    elements: Vec<Elem>,
    atoms: Vec<Elem>,
    algebra: FiniteBooleanAlgebra,
}

impl RingIdempotents {
    fn new(ring: &Ring) -> Result<Self> {
        let elements = ring.idempotents()?;
        let nonzero: Vec<&Elem> = elements.iter().filter(|e| !ring.is_zero(e)).collect();
        let atoms: Vec<Elem> = nonzero
            .iter()
            .filter(|&&e| {
                nonzero
                    .iter()
                    .all(|&f| f == e || ring.mul(e, f) != *f)
            })
            .map(|&e| e.clone())
            .collect();
        let algebra = FiniteBooleanAlgebra::new(atoms.len())?;
        Ok(RingIdempotents {
            ring: ring.clone(),
            elements,
            atoms,
            algebra,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    /// Minimal nonzero idempotents, in enumeration order.
    pub fn atoms(&self) -> &[Elem] {
        &self.atoms
    }

    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.algebra
    }

    pub fn join(&self, e: &Elem, f: &Elem) -> Elem {
        let r = &self.ring;
        r.sub(&r.add(e, f), &r.mul(e, f))
    }

    pub fn to_ba(&self, e: &Elem) -> Result<BAElement> {
        if !self.ring.contains(e) || !self.ring.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        self.algebra.element(
            self.atoms
                .iter()
                .enumerate()
                .filter(|(_, a)| self.ring.mul(a, e) == **a)
                .map(|(i, _)| i),
        )
    }

    pub fn from_ba(&self, x: &BAElement) -> Elem {
        x.atoms()
            .iter()
            .fold(self.ring.zero(), |acc, &i| self.ring.add(&acc, &self.atoms[i]))
    }
}
