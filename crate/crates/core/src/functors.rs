//! The functors between Boolean algebras and Specker algebras.
//!
//! `𝒮` sends `B` to `R[B]` and a Boolean hom `σ` to the algebra hom
//! `y_e ↦ y_{σ(e)}`; `ℐ` sends `S` to `Id(S)` and an algebra hom to its
//! restriction to idempotents. An algebra hom out of `R[B]` is stored by its
//! Boolean datum `B → Id(T)` and evaluated by lifting it.

use std::collections::HashSet;

use crate::boolean_algebra::{BAElement, BoolHom, FiniteBooleanAlgebra};
use crate::error::{Error, Result};
use crate::rings::Ring;
use crate::specker::{IdempotentAlgebra, SpeckerAlgebra, SpeckerElement};

/// An `R`-algebra homomorphism `R[B] → T`, determined by a Boolean hom
/// `B → Id(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom {
    source: SpeckerAlgebra,
    target: SpeckerAlgebra,
    datum: BoolHom,
    /// `α(y_{x})` for each atom `x` of the source.
    images: Vec<SpeckerElement>,
}

impl AlgebraHom {
    pub fn source(&self) -> &SpeckerAlgebra {
        &self.source
    }

    pub fn target(&self) -> &SpeckerAlgebra {
        &self.target
    }

    /// The Boolean hom `B → Id(T)` this hom lifts.
    pub fn datum(&self) -> &BoolHom {
        &self.datum
    }

    /// Images of the atom indicators of the source.
    pub fn generator_images(&self) -> &[SpeckerElement] {
        &self.images
    }

    /// `α(Σ aₓ y_{x}) = Σ aₓ σ(x)`.
    pub fn apply(&self, s: &SpeckerElement) -> Result<SpeckerElement> {
        self.source.check(s)?;
        let mut acc = self.target.zero();
        for (a, img) in s.values().iter().zip(&self.images) {
            acc = self.target.add(&acc, &self.target.scale(a, img)?)?;
        }
        Ok(acc)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AlgebraHom) -> Result<AlgebraHom> {
        if inner.target != self.source {
            return Err(Error::TargetMismatch(format!(
                "cannot compose {} → {} after {} → {}",
                self.source, self.target, inner.source, inner.target
            )));
        }
        let images = inner
            .images
            .iter()
            .map(|s| self.apply(s))
            .collect::<Result<Vec<_>>>()?;
        from_generator_images(&inner.source, &self.target, images)
    }

    pub fn identity(s: &SpeckerAlgebra) -> AlgebraHom {
        let images = (0..s.atom_count()).map(|x| s.atom_indicator(x)).collect();
        from_generator_images(s, s, images).expect("atom indicators form a partition of unity")
    }

    /// A nonzero element of the kernel, if one is found: exhaustively over a
    /// finite source of at most `limit` elements, otherwise among the
    /// scaled generators `a·y_e` for sampled scalars `a`.
    pub fn kernel_witness(&self, limit: u128) -> Result<Option<SpeckerElement>> {
        let candidates = match self.source.cardinality() {
            Some(n) if n <= limit => self.source.elements()?,
            _ => {
                let b = self.source.algebra();
                let mut out = Vec::new();
                let idems: Vec<BAElement> = if b.atom_count() <= 10 {
                    b.elements()
                } else {
                    b.atoms()
                };
                for a in self.source.ring().sample_elements() {
                    for e in &idems {
                        out.push(self.source.scaled_generator(&a, e)?);
                    }
                }
                out
            }
        };
        for s in candidates {
            if !self.source.is_zero(&s) && self.target.is_zero(&self.apply(&s)?) {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// Bijectivity: decided on finite carriers by enumeration (up to
    /// `limit` elements); on infinite carriers the hom is an isomorphism iff
    /// its Boolean datum is one and the ring is indecomposable.
    pub fn is_isomorphism(&self, limit: u128) -> Result<bool> {
        match (self.source.cardinality(), self.target.cardinality()) {
            (Some(m), Some(n)) if m != n => Ok(false),
            (Some(m), Some(_)) if m <= limit => {
                let mut seen = HashSet::new();
                for s in self.source.elements()? {
                    if !seen.insert(self.apply(&s)?) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Ok(self.datum.is_isomorphism()
                && self.source.ring().idempotents()?.len() == 2),
        }
    }
}

/// The hom `source → target` sending the indicator of atom `x` to `images[x]`.
///
/// The images must be orthogonal idempotents summing to one; the Boolean
/// datum is recovered from them.
pub fn from_generator_images(
    source: &SpeckerAlgebra,
    target: &SpeckerAlgebra,
    images: Vec<SpeckerElement>,
) -> Result<AlgebraHom> {
    if source.ring() != target.ring() {
        return Err(Error::RingMismatch(format!(
            "{} and {}",
            source.ring(),
            target.ring()
        )));
    }
    if images.len() != source.atom_count() {
        return Err(Error::TargetMismatch(format!(
            "{} images for {} atoms",
            images.len(),
            source.atom_count()
        )));
    }
    let ids = target.idempotent_algebra()?;
    let coords: Vec<BAElement> = images
        .iter()
        .map(|s| ids.from_element(s))
        .collect::<Result<_>>()?;
    let idb = ids.algebra();
    let dual_map = (0..idb.atom_count())
        .map(|k| {
            let owners: Vec<usize> = (0..coords.len()).filter(|&x| coords[x].contains(k)).collect();
            match owners[..] {
                [x] => Ok(x),
                _ => Err(Error::TargetMismatch(
                    "generator images are not a partition of unity".into(),
                )),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let datum = BoolHom::new(source.algebra(), idb, dual_map)?;
    Ok(AlgebraHom {
        source: source.clone(),
        target: target.clone(),
        datum,
        images,
    })
}

/// `𝒮(B) = R[B]`.
pub fn functor_s_obj(b: FiniteBooleanAlgebra, ring: Ring) -> SpeckerAlgebra {
    SpeckerAlgebra::new(ring, b)
}

/// `𝒮(σ)`: the algebra hom `y_e ↦ y_{σ(e)}`, acting pointwise by `s ↦ s ∘ σ*`.
pub fn functor_s_hom(sigma: &BoolHom, ring: &Ring) -> Result<AlgebraHom> {
    let source = SpeckerAlgebra::new(ring.clone(), sigma.source());
    let target = SpeckerAlgebra::new(ring.clone(), sigma.target());
    let images = source
        .algebra()
        .atoms()
        .iter()
        .map(|x| target.generator(&sigma.apply(x)?))
        .collect::<Result<Vec<_>>>()?;
    from_generator_images(&source, &target, images)
}

/// `ℐ(S) = Id(S)`.
pub fn functor_i(s: &SpeckerAlgebra) -> Result<IdempotentAlgebra> {
    s.idempotent_algebra()
}

/// `ℐ(α) = α|Id(S)`, as a Boolean hom `Id(S) → Id(T)`.
pub fn functor_i_hom(alpha: &AlgebraHom) -> Result<BoolHom> {
    let src = alpha.source.idempotent_algebra()?;
    let tgt = alpha.target.idempotent_algebra()?;
    let images: Vec<BAElement> = (0..src.algebra().atom_count())
        .map(|k| tgt.from_element(&alpha.apply(&src.atom_element(k))?))
        .collect::<Result<_>>()?;
    let dual_map = (0..tgt.algebra().atom_count())
        .map(|q| {
            images
                .iter()
                .position(|img| img.contains(q))
                .ok_or_else(|| Error::TargetMismatch("restriction is not unital".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    BoolHom::new(src.algebra(), tgt.algebra(), dual_map)
}

/// Lifts a Boolean hom `σ: B → Id(T)` to the unique algebra hom
/// `α: R[B] → T` with `α ∘ i_B = σ`.
pub fn ump_lift(source: &SpeckerAlgebra, target: &SpeckerAlgebra, sigma: &BoolHom) -> Result<AlgebraHom> {
    if source.ring() != target.ring() {
        return Err(Error::RingMismatch(format!(
            "{} and {}",
            source.ring(),
            target.ring()
        )));
    }
    let ids = target.idempotent_algebra()?;
    if sigma.source() != source.algebra() || sigma.target() != ids.algebra() {
        return Err(Error::TargetMismatch(format!(
            "expected a hom {} → {}, got {} → {}",
            source.algebra(),
            ids.algebra(),
            sigma.source(),
            sigma.target()
        )));
    }
    let images = source
        .algebra()
        .atoms()
        .iter()
        .map(|x| ids.to_element(&sigma.apply(x)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraHom {
        source: source.clone(),
        target: target.clone(),
        datum: sigma.clone(),
        images,
    })
}

/// The unit `i_B: B → ℐ(𝒮(B))`, `e ↦ y_e`.
pub fn unit(b: FiniteBooleanAlgebra, ring: &Ring) -> Result<BoolHom> {
    let ids = SpeckerAlgebra::new(ring.clone(), b).idempotent_algebra()?;
    let dual_map = (0..ids.algebra().atom_count())
        .map(|k| ids.atom_coordinates(k).1)
        .collect();
    BoolHom::new(b, ids.algebra(), dual_map)
}

/// The counit `α_S: 𝒮(ℐ(S)) → S`, `y_e ↦ e`.
pub fn counit(s: &SpeckerAlgebra) -> Result<AlgebraHom> {
    let ids = s.idempotent_algebra()?;
    let source = SpeckerAlgebra::new(s.ring().clone(), ids.algebra());
    Ok(AlgebraHom {
        source,
        target: s.clone(),
        datum: BoolHom::identity(ids.algebra()),
        images: (0..ids.algebra().atom_count())
            .map(|k| ids.atom_element(k))
            .collect(),
    })
}

/// Unit and counit at `(B, R)`, with their isomorphism flags.
#[derive(Clone, Debug)]
pub struct UnitCounit {
    pub unit: BoolHom,
    pub unit_is_isomorphism: bool,
    pub counit: AlgebraHom,
    pub counit_is_isomorphism: bool,
}

/// Unit at `B` and counit at `S = 𝒮(B)`.
pub fn unit_counit(b: FiniteBooleanAlgebra, ring: &Ring, limit: u128) -> Result<UnitCounit> {
    let unit = unit(b, ring)?;
    let counit = counit(&functor_s_obj(b, ring.clone()))?;
    Ok(UnitCounit {
        unit_is_isomorphism: unit.is_isomorphism(),
        counit_is_isomorphism: counit.is_isomorphism(limit)?,
        unit,
        counit,
    })
}

/// All algebra homs `S → T`: every Boolean hom `B → Id(T)`, lifted.
pub fn enumerate_algebra_homs(s: &SpeckerAlgebra, t: &SpeckerAlgebra) -> Result<Vec<AlgebraHom>> {
    if s.ring() != t.ring() {
        return Err(Error::RingMismatch(format!("{} and {}", s.ring(), t.ring())));
    }
    let ids = t.idempotent_algebra()?;
    s.algebra()
        .enumerate_homs(&ids.algebra())?
        .iter()
        .map(|sigma| ump_lift(s, t, sigma))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceRow {
    pub atoms: usize,
    pub unit_is_isomorphism: bool,
    pub counit_is_isomorphism: bool,
}

/// Whether unit and counit are isomorphisms at every requested size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub ring: Ring,
    pub rows: Vec<EquivalenceRow>,
    pub equivalence_holds: bool,
    pub is_indecomposable: bool,
}

impl EquivalenceReport {
    /// The equivalence holds exactly for indecomposable rings.
    pub fn is_consistent(&self) -> bool {
        self.equivalence_holds == self.is_indecomposable
    }
}

pub fn equivalence_report(ring: &Ring, atom_sizes: &[usize], limit: u128) -> Result<EquivalenceReport> {
    let rows = atom_sizes
        .iter()
        .map(|&n| {
            let uc = unit_counit(FiniteBooleanAlgebra::new(n)?, ring, limit)?;
            Ok(EquivalenceRow {
                atoms: n,
                unit_is_isomorphism: uc.unit_is_isomorphism,
                counit_is_isomorphism: uc.counit_is_isomorphism,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let equivalence_holds = rows
        .iter()
        .all(|r| r.unit_is_isomorphism && r.counit_is_isomorphism);
    Ok(EquivalenceReport {
        ring: ring.clone(),
        rows,
        equivalence_holds,
        is_indecomposable: ring.classify()?.is_indecomposable,
    })
}
