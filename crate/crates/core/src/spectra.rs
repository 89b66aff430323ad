//! Hom spaces, minimal prime spectra, annihilators and the Baer property.

use std::collections::BTreeSet;

use rand::Rng;

use crate::boolean_algebra::{BAElement, FiniteBooleanAlgebra};
use crate::error::{Error, Result};
use crate::functors::{self, AlgebraHom};
use crate::rings::Elem;
use crate::specker::{Coverage, SpeckerAlgebra, SpeckerElement};

/// `Hom_R(S, R)` with its subbasis `U_s = {α : α(s) = 0}`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    algebra: SpeckerAlgebra,
    points: Vec<AlgebraHom>,
}

impl HomSpace {
    pub fn new(s: &SpeckerAlgebra) -> Result<Self> {
        let base = SpeckerAlgebra::base(s.ring().clone());
        Ok(HomSpace {
            algebra: s.clone(),
            points: functors::enumerate_algebra_homs(s, &base)?,
        })
    }

    pub fn points(&self) -> &[AlgebraHom] {
        &self.points
    }

    /// For an indecomposable ring each point is the evaluation at one atom.
    pub fn point_atom(&self, i: usize) -> Option<usize> {
        let images = self.points[i].generator_images();
        let one = self.algebra.ring().one();
        let hits: Vec<usize> = (0..images.len())
            .filter(|&x| images[x].values()[0] == one)
            .collect();
        match hits[..] {
            [x] => Some(x),
            _ => None,
        }
    }

    /// `U_s`, as indices into [`HomSpace::points`].
    pub fn zero_set(&self, s: &SpeckerElement) -> Result<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for (i, alpha) in self.points.iter().enumerate() {
            if self.algebra.is_zero(&alpha.apply(s)?) {
                // the target is the 1-atom algebra, so zero means α(s) = 0 in R
                out.insert(i);
            }
        }
        Ok(out)
    }

    /// Checks `U_s = U_{e₁} ∩ … ∩ U_{eₙ}` over the orthogonal parts of `s`.
    pub fn zero_set_matches_parts(&self, s: &SpeckerElement) -> Result<bool> {
        let form = self.algebra.from_pointwise(s)?;
        let mut meet: BTreeSet<usize> = (0..self.points.len()).collect();
        for (_, e) in form.parts() {
            let ue = self.zero_set(&self.algebra.generator(e)?)?;
            meet = meet.intersection(&ue).copied().collect();
        }
        Ok(meet == self.zero_set(s)?)
    }
}

/// A minimal prime of `S`, represented by a hom `α: S → R` with `P = ker α`.
#[derive(Clone, Debug)]
pub struct MinimalPrime {
    witness: AlgebraHom,
}

impl MinimalPrime {
    pub fn witness(&self) -> &AlgebraHom {
        &self.witness
    }

    pub fn contains(&self, s: &SpeckerElement) -> Result<bool> {
        let image = self.witness.apply(s)?;
        Ok(self.witness.target().is_zero(&image))
    }

    /// A nonzero `t` with `t·s = 0` for a nonzero member `s`: the indicator
    /// of the atoms the witness hom evaluates at. `None` if `s` is zero or
    /// not a member.
    pub fn zero_divisor_witness(&self, s: &SpeckerElement) -> Result<Option<SpeckerElement>> {
        let src = self.witness.source();
        if src.is_zero(s) || !self.contains(s)? {
            return Ok(None);
        }
        // over a domain α is evaluation at one atom, where s must vanish
        let one = src.ring().one();
        let support: Vec<usize> = self
            .witness
            .generator_images()
            .iter()
            .enumerate()
            .filter(|(_, img)| img.values()[0] == one)
            .map(|(x, _)| x)
            .collect();
        let e = src.algebra().element(support)?;
        let t = src.generator(&e)?;
        if src.is_zero(&src.mul(&t, s)?) && !src.is_zero(&t) {
            Ok(Some(t))
        } else {
            Ok(None)
        }
    }
}

/// `Min(S)` for `S` over a domain, with `φ(α) = ker α` indexed like the hom space.
#[derive(Clone, Debug)]
pub struct MinSpectrum {
    algebra: SpeckerAlgebra,
    space: HomSpace,
    primes: Vec<MinimalPrime>,
}

impl MinSpectrum {
    pub fn new(s: &SpeckerAlgebra) -> Result<Self> {
        if !s.ring().classify()?.is_domain {
            return Err(Error::NotADomain);
        }
        let space = HomSpace::new(s)?;
        let primes = space
            .points()
            .iter()
            .map(|alpha| MinimalPrime {
                witness: alpha.clone(),
            })
            .collect();
        Ok(MinSpectrum {
            algebra: s.clone(),
            space,
            primes,
        })
    }

    pub fn primes(&self) -> &[MinimalPrime] {
        &self.primes
    }

    pub fn hom_space(&self) -> &HomSpace {
        &self.space
    }

    /// `φ`: point `i` of the hom space ↦ prime `i`.
    pub fn phi(&self, point: usize) -> &MinimalPrime {
        &self.primes[point]
    }

    /// `Z(s) = {P : s ∈ P}`.
    pub fn zero_locus(&self, s: &SpeckerElement) -> Result<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for (i, p) in self.primes.iter().enumerate() {
            if p.contains(s)? {
                out.insert(i);
            }
        }
        Ok(out)
    }

    /// `Z(s) = φ(U_s)`.
    pub fn phi_matches(&self, s: &SpeckerElement) -> Result<bool> {
        Ok(self.zero_locus(s)? == self.space.zero_set(s)?)
    }

    /// `P ∩ R = 0` on the given scalars: no nonzero constant lies in any prime.
    pub fn meets_ring_trivially(&self, scalars: &[Elem]) -> Result<bool> {
        for p in &self.primes {
            for a in scalars {
                if !self.algebra.ring().is_zero(a) && p.contains(&self.algebra.constant(a))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `R → S → S/P` is a bijection: `α(a) = a` on the scalars, and every
    /// `s` is congruent modulo `P` to the constant `α(s)`.
    pub fn residue_map_is_bijective(&self, scalars: &[Elem], elements: &[SpeckerElement]) -> Result<bool> {
        let s = &self.algebra;
        for p in &self.primes {
            let alpha = p.witness();
            for a in scalars {
                if alpha.apply(&s.constant(a))?.values()[0] != *a {
                    return Ok(false);
                }
            }
            for x in elements {
                let a = alpha.apply(x)?.values()[0].clone();
                if !p.contains(&s.sub(x, &s.constant(&a))?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Idempotent `e` with `ann_S(s) = eS`, built atomwise from ring witnesses.
pub fn annihilator(s: &SpeckerAlgebra, x: &SpeckerElement) -> Result<SpeckerElement> {
    s.check(x)?;
    let values = x
        .values()
        .iter()
        .map(|v| s.ring().annihilator_witness(v))
        .collect::<Result<Vec<_>>>()?;
    s.element(values)
}

/// `ann_S(I) = eS` with `e` the meet (product) of the individual witnesses.
pub fn annihilator_of_set(s: &SpeckerAlgebra, set: &[SpeckerElement]) -> Result<SpeckerElement> {
    set.iter().try_fold(s.one(), |acc, x| s.mul(&acc, &annihilator(s, x)?))
}

/// Verifies `ann_S(I) = eS` over `check`: `e` is idempotent, `(e·t)·x = 0`
/// for all `x ∈ I`, and `t·I = 0` implies `e·t = t`.
pub fn verify_annihilator(
    s: &SpeckerAlgebra,
    set: &[SpeckerElement],
    e: &SpeckerElement,
    check: &[SpeckerElement],
) -> Result<bool> {
    if !s.is_idempotent(e)? {
        return Ok(false);
    }
    for t in check {
        let et = s.mul(e, t)?;
        let mut kills = true;
        for x in set {
            if !s.is_zero(&s.mul(&et, x)?) {
                return Ok(false);
            }
            kills &= s.is_zero(&s.mul(t, x)?);
        }
        if kills && et != *t {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verification set for ideal equalities: the whole carrier up to `limit`,
/// otherwise random elements biased towards zeros so that annihilating
/// elements actually occur.
pub fn annihilator_check_set<G: Rng + ?Sized>(
    s: &SpeckerAlgebra,
    limit: u128,
    samples: usize,
    rng: &mut G,
) -> Result<(Vec<SpeckerElement>, Coverage)> {
    match s.cardinality() {
        Some(n) if n <= limit => Ok((s.elements()?, Coverage::Exhaustive)),
        _ => {
            let zero = s.ring().zero();
            let out = (0..samples)
                .map(|_| {
                    let mut t = s.random_element(rng, 10);
                    let values = t
                        .values()
                        .iter()
                        .map(|v| if rng.gen_bool(0.5) { zero.clone() } else { v.clone() })
                        .collect();
                    t = s.element(values).expect("values from the ring");
                    t
                })
                .collect();
            Ok((out, Coverage::Sampled(samples)))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaerReport {
    pub weak_baer: bool,
    pub witness_failure: Option<Elem>,
    pub id_complete: bool,
    pub baer: bool,
}

/// `S` is weak Baer iff `R` is; Baer iff weak Baer and `Id(S)` is complete.
pub fn baer_report(s: &SpeckerAlgebra) -> Result<BaerReport> {
    let class = s.ring().classify()?;
    let ids = s.idempotent_algebra()?;
    let id_complete = id_algebra_is_complete(ids.algebra())?;
    if class.is_domain && !class.is_weak_baer {
        return Err(Error::InconsistentBackend(
            "a domain must be weak Baer".into(),
        ));
    }
    Ok(BaerReport {
        weak_baer: class.is_weak_baer,
        witness_failure: class.weak_baer_failure,
        id_complete,
        baer: class.is_weak_baer && id_complete,
    })
}

/// Every family of elements has a least upper and a greatest lower bound.
/// Checked over all families for algebras with at most 3 atoms; larger
/// finite algebras are complete because binary joins and meets exist and
/// every family is finite, which is checked over all pairs up to 6 atoms.
fn id_algebra_is_complete(b: FiniteBooleanAlgebra) -> Result<bool> {
    if b.atom_count() > 6 {
        return Ok(true);
    }
    let els = b.elements();
    let is_lub = |j: &BAElement, m: &BAElement, fam: &[&BAElement]| -> Result<bool> {
        for u in &els {
            let upper = fam.iter().map(|x| x.leq(u)).collect::<Result<Vec<_>>>()?.into_iter().all(|v| v);
            let lower = fam.iter().map(|x| u.leq(x)).collect::<Result<Vec<_>>>()?.into_iter().all(|v| v);
            if upper != j.leq(u)? || lower != u.leq(m)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    if b.atom_count() <= 3 {
        for mask in 0u32..1 << els.len() {
            let fam: Vec<&BAElement> = (0..els.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &els[i])
                .collect();
            let j = b.complete_join(fam.iter().copied())?;
            let m = b.complete_meet(fam.iter().copied())?;
            if !is_lub(&j, &m, &fam)? {
                return Ok(false);
            }
        }
    } else {
        for x in &els {
            for y in &els {
                let fam = [x, y];
                if !is_lub(&x.join(y)?, &x.meet(y)?, &fam)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `R[DM(Id(S))]` with the canonical embedding of `S`.
#[derive(Clone, Debug)]
pub struct InjectiveHull {
    pub hull: SpeckerAlgebra,
    pub embedding: AlgebraHom,
}

pub fn injective_hull(s: &SpeckerAlgebra) -> Result<InjectiveHull> {
    if !s.ring().classify()?.is_domain {
        return Err(Error::NotADomain);
    }
    let ids = functors::functor_i(s)?;
    let completed = ids.algebra().dm_completion();
    let hull = functors::functor_s_obj(completed, s.ring().clone());
    // y_x ↦ y_{[y_x]}: the generator of the hull at the idempotent y_x of S
    let images = (0..s.atom_count())
        .map(|x| {
            let e = ids.from_element(&s.atom_indicator(x))?;
            hull.generator(&e)
        })
        .collect::<Result<Vec<_>>>()?;
    let embedding = functors::from_generator_images(s, &hull, images)?;
    Ok(InjectiveHull { hull, embedding })
}
