use std::collections::HashSet;

use crate::boolean_algebra::{BAElement, FiniteBooleanAlgebra};
use crate::error::{Error, Result};
use crate::rings::RingIdempotents;

use super::{SpeckerAlgebra, SpeckerElement};

/// `Id(S)` as a finite Boolean algebra.
///
/// Its atoms are the functions supported on one atom `x` of `B` whose value
/// there is an atom `r` of `Id(R)`; atom `(r, x)` has index `r * |B| + x`,
/// matching the atom indexing of the coproduct `Id(R) ⊕ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentAlgebra {
    parent: SpeckerAlgebra,
    ring_idempotents: RingIdempotents,
    algebra: FiniteBooleanAlgebra,
}

impl IdempotentAlgebra {
    pub fn parent(&self) -> &SpeckerAlgebra {
        &self.parent
    }

    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.algebra
    }

    pub fn ring_idempotents(&self) -> &RingIdempotents {
        &self.ring_idempotents
    }

    /// `(ring atom index, B atom index)` of atom `k`.
    pub fn atom_coordinates(&self, k: usize) -> (usize, usize) {
        let n = self.parent.atom_count();
        (k / n, k % n)
    }

    pub fn atom_element(&self, k: usize) -> SpeckerElement {
        let (r, x) = self.atom_coordinates(k);
        let ring = self.parent.ring();
        let mut values = vec![ring.zero(); self.parent.atom_count()];
        values[x] = self.ring_idempotents.atoms()[r].clone();
        SpeckerElement { values }
    }

    pub fn to_element(&self, e: &BAElement) -> Result<SpeckerElement> {
        if e.algebra() != self.algebra {
            return Err(Error::MixedAlgebras(format!(
                "{} is not the idempotent algebra {}",
                e.algebra(),
                self.algebra
            )));
        }
        let ring = self.parent.ring();
        let mut values = vec![ring.zero(); self.parent.atom_count()];
        for &k in e.atoms() {
            let (r, x) = self.atom_coordinates(k);
            values[x] = ring.add(&values[x], &self.ring_idempotents.atoms()[r]);
        }
        Ok(SpeckerElement { values })
    }

    pub fn from_element(&self, s: &SpeckerElement) -> Result<BAElement> {
        if !self.parent.is_idempotent(s)? {
            return Err(Error::NotIdempotent);
        }
        let ring = self.parent.ring();
        let atoms = self.ring_idempotents.atoms();
        let n = self.parent.atom_count();
        self.algebra.element((0..self.algebra.atom_count()).filter(|&k| {
            let (r, x) = (k / n, k % n);
            ring.mul(&atoms[r], s.value(x)) == atoms[r]
        }))
    }

    /// All idempotents of `S`, in the enumeration order of the Boolean algebra.
    pub fn elements(&self) -> Result<Vec<SpeckerElement>> {
        if self.algebra.atom_count() > 20 {
            return Err(Error::UnsupportedCapability(format!(
                "Id(S) has 2^{} elements",
                self.algebra.atom_count()
            )));
        }
        self.algebra
            .elements()
            .iter()
            .map(|e| self.to_element(e))
            .collect()
    }
}

/// The Boolean subalgebra of `Id(S)` generated by a set of idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentClosure {
    /// Atoms of the generated subalgebra, ordered by their position in `Id(S)`.
    pub blocks: Vec<SpeckerElement>,
}

impl IdempotentClosure {
    /// The closure as an abstract Boolean algebra.
    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        FiniteBooleanAlgebra::new(self.blocks.len()).expect("closure has at least one block")
    }

    /// Every member: the sums of subsets of blocks.
    pub fn elements(&self, parent: &SpeckerAlgebra) -> Result<Vec<SpeckerElement>> {
        self.algebra()
            .elements()
            .iter()
            .map(|e| parent.sum(e.atoms().iter().map(|&i| &self.blocks[i])))
            .collect()
    }
}

impl SpeckerAlgebra {
    pub fn idempotent_algebra(&self) -> Result<IdempotentAlgebra> {
        let ring_idempotents = self.ring().idempotent_algebra()?;
        let algebra = FiniteBooleanAlgebra::new(
            ring_idempotents.algebra().atom_count() * self.atom_count(),
        )?;
        Ok(IdempotentAlgebra {
            parent: self.clone(),
            ring_idempotents,
            algebra,
        })
    }

    /// Closes `gens` under `∧`, `∨`, `¬` inside `Id(S)`.
    pub fn idempotent_closure(&self, gens: &[SpeckerElement]) -> Result<IdempotentClosure> {
        let ids = self.idempotent_algebra()?;
        let coords: Vec<BAElement> = gens
            .iter()
            .map(|g| ids.from_element(g))
            .collect::<Result<_>>()?;
        let blocks = ids.algebra().minterm_refinement(&coords)?;
        if blocks.len() > 20 {
            return Err(Error::UnsupportedCapability(format!(
                "closure has 2^{} elements",
                blocks.len()
            )));
        }
        Ok(IdempotentClosure {
            blocks: blocks
                .iter()
                .map(|b| ids.to_element(b))
                .collect::<Result<_>>()?,
        })
    }

    /// Whether `gens` generates a faithful generating algebra of idempotents:
    /// every nonzero member of the closure is faithful and the closure spans
    /// `S` as an `R`-module.
    ///
    /// The span is decided exhaustively over finite rings (up to `limit`
    /// elements), and for infinite indecomposable rings by requiring the
    /// closure's atoms to be the atom indicators of `B`.
    pub fn is_faithful_generating(&self, gens: &[SpeckerElement], limit: u128) -> Result<bool> {
        let closure = self.idempotent_closure(gens)?;
        // faithfulness is upward closed, so checking the atoms of the closure suffices
        for b in &closure.blocks {
            if !self.is_faithful(b)? {
                return Ok(false);
            }
        }
        match self.cardinality() {
            Some(n) if n <= limit => {
                // closure members are sums of blocks, so the blocks span the same module
                let ring_elements = self.ring().elements()?;
                let mut span: HashSet<SpeckerElement> = HashSet::from([self.zero()]);
                for b in &closure.blocks {
                    let multiples: Vec<SpeckerElement> = ring_elements
                        .iter()
                        .map(|a| self.scale(a, b))
                        .collect::<Result<_>>()?;
                    let mut next = HashSet::with_capacity(span.len() * multiples.len());
                    for s in &span {
                        for m in &multiples {
                            next.insert(self.add(s, m)?);
                        }
                    }
                    span = next;
                }
                Ok(span.len() as u128 == n)
            }
            Some(_) => Err(Error::UnsupportedCapability(format!(
                "carrier of {self} exceeds the exhaustive limit {limit}"
            ))),
            None => {
                if self.ring().idempotents()?.len() != 2 {
                    return Err(Error::UnsupportedCapability(format!(
                        "span test over the infinite decomposable ring {}",
                        self.ring()
                    )));
                }
                let one = self.ring().one();
                Ok(closure
                    .blocks
                    .iter()
                    .all(|b| b.values().iter().filter(|v| **v == one).count() == 1))
            }
        }
    }

    /// The canonical generators `{y_e : e ∈ B}`.
    pub fn canonical_generators(&self) -> Vec<SpeckerElement> {
        self.algebra()
            .elements()
            .iter()
            .map(|e| self.generator(e).expect("element of B"))
            .collect()
    }
}
