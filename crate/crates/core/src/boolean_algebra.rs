//! Finite Boolean algebras presented by their atoms.
//!
//! Every finite Boolean algebra is the power set of its atoms, so an algebra
//! is just an atom count and an element is a set of atom indices. Boolean
//! homomorphisms are stored dually, as maps from the atoms of the target to
//! the atoms of the source (the Stone dual of the hom).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite Boolean algebra with `atom_count` atoms (and `2^atom_count` elements).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteBooleanAlgebra {
    atom_count: usize,
}

impl FiniteBooleanAlgebra {
    /// The degenerate one-element algebra (zero atoms) is rejected.
    pub fn new(atom_count: usize) -> Result<Self> {
        if atom_count == 0 {
            return Err(Error::InvalidArgument(
                "a Boolean algebra needs at least one atom".into(),
            ));
        }
        Ok(FiniteBooleanAlgebra { atom_count })
    }

    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    /// Number of elements, `None` if it does not fit in a `u128`.
    pub fn cardinality(&self) -> Option<u128> {
        u32::try_from(self.atom_count)
            .ok()
            .and_then(|n| 2u128.checked_pow(n))
    }

    pub fn bottom(&self) -> BAElement {
        BAElement {
            algebra: *self,
            atoms: BTreeSet::new(),
        }
    }

    pub fn top(&self) -> BAElement {
        BAElement {
            algebra: *self,
            atoms: (0..self.atom_count).collect(),
        }
    }

    pub fn atom(&self, index: usize) -> Result<BAElement> {
        self.element([index])
    }

    pub fn atoms(&self) -> Vec<BAElement> {
        (0..self.atom_count)
            .map(|i| BAElement {
                algebra: *self,
                atoms: BTreeSet::from([i]),
            })
            .collect()
    }

    pub fn element<I: IntoIterator<Item = usize>>(&self, atoms: I) -> Result<BAElement> {
        let atoms: BTreeSet<usize> = atoms.into_iter().collect();
        if let Some(&bad) = atoms.iter().find(|&&a| a >= self.atom_count) {
            return Err(Error::InvalidArgument(format!(
                "atom index {bad} out of range for an algebra with {} atoms",
                self.atom_count
            )));
        }
        Ok(BAElement {
            algebra: *self,
            atoms,
        })
    }

    /// All elements, ordered by the binary value of their indicator (atom 0 is bit 0).
    ///
    /// Intended for small algebras; panics if there are more than 2^20 elements.
    pub fn elements(&self) -> Vec<BAElement> {
        assert!(self.atom_count <= 20, "too many atoms to enumerate");
        (0u64..1 << self.atom_count)
            .map(|mask| BAElement {
                algebra: *self,
                atoms: (0..self.atom_count).filter(|i| mask >> i & 1 == 1).collect(),
            })
            .collect()
    }

    /// Finite Boolean algebras are isomorphic exactly when their atom counts agree.
    pub fn is_isomorphic(&self, other: &FiniteBooleanAlgebra) -> bool {
        self.atom_count == other.atom_count
    }

    fn check(&self, x: &BAElement) -> Result<()> {
        if x.algebra != *self {
            return Err(Error::MixedAlgebras(format!(
                "element of a {}-atom algebra used in a {}-atom algebra",
                x.algebra.atom_count, self.atom_count
            )));
        }
        Ok(())
    }

    /// Least upper bound of a family; the empty family joins to bottom.
    pub fn complete_join<'a, I>(&self, family: I) -> Result<BAElement>
    where
        I: IntoIterator<Item = &'a BAElement>,
    {
        let mut acc = self.bottom();
        for x in family {
            self.check(x)?;
            acc.atoms.extend(x.atoms.iter().copied());
        }
        Ok(acc)
    }

    /// Greatest lower bound of a family; the empty family meets to top.
    pub fn complete_meet<'a, I>(&self, family: I) -> Result<BAElement>
    where
        I: IntoIterator<Item = &'a BAElement>,
    {
        let mut acc = self.top();
        for x in family {
            self.check(x)?;
            acc.atoms.retain(|a| x.atoms.contains(a));
        }
        Ok(acc)
    }

    /// Blocks of the subalgebra generated by `gens`: the nonempty minterms,
    /// ordered by least atom.
    ///
    /// Two atoms share a block iff they have the same membership pattern
    /// across the generators.
    pub fn minterm_refinement(&self, gens: &[BAElement]) -> Result<Vec<BAElement>> {
        for g in gens {
            self.check(g)?;
        }
        let mut blocks: Vec<(Vec<bool>, BAElement)> = Vec::new();
        for atom in 0..self.atom_count {
            let pattern: Vec<bool> = gens.iter().map(|g| g.atoms.contains(&atom)).collect();
            match blocks.iter_mut().find(|(p, _)| *p == pattern) {
                Some((_, block)) => {
                    block.atoms.insert(atom);
                }
                None => blocks.push((pattern, self.element([atom])?)),
            }
        }
        Ok(blocks.into_iter().map(|(_, b)| b).collect())
    }

    /// The Dedekind-MacNeille completion. Finite Boolean algebras are already
    /// complete, so this is the algebra itself.
    pub fn dm_completion(&self) -> FiniteBooleanAlgebra {
        *self
    }

    /// Coproduct `self ⊕ other` with its two coprojections.
    ///
    /// The atoms of the coproduct are pairs `(i, j)` of atoms, indexed
    /// `i * other.atom_count() + j`.
    pub fn coproduct(&self, other: &FiniteBooleanAlgebra) -> (FiniteBooleanAlgebra, BoolHom, BoolHom) {
        let n = other.atom_count;
        let sum = FiniteBooleanAlgebra {
            atom_count: self.atom_count * n,
        };
        let left = BoolHom {
            source: *self,
            target: sum,
            dual_map: (0..sum.atom_count).map(|k| k / n).collect(),
        };
        let right = BoolHom {
            source: *other,
            target: sum,
            dual_map: (0..sum.atom_count).map(|k| k % n).collect(),
        };
        (sum, left, right)
    }

    /// The mediating hom `A ⊕ B → C` induced by `f: A → C` and `g: B → C`.
    pub fn copair(f: &BoolHom, g: &BoolHom) -> Result<BoolHom> {
        if f.target != g.target {
            return Err(Error::TargetMismatch(
                "copairing needs homs into the same algebra".into(),
            ));
        }
        let (sum, _, _) = f.source.coproduct(&g.source);
        let n = g.source.atom_count;
        Ok(BoolHom {
            source: sum,
            target: f.target,
            dual_map: f
                .dual_map
                .iter()
                .zip(&g.dual_map)
                .map(|(&i, &j)| i * n + j)
                .collect(),
        })
    }

    /// All Boolean homomorphisms `self → target`, one per dual map
    /// `atoms(target) → atoms(self)`, in lexicographic order of dual maps.
    pub fn enumerate_homs(&self, target: &FiniteBooleanAlgebra) -> Result<Vec<BoolHom>> {
        let count = u32::try_from(target.atom_count)
            .ok()
            .and_then(|e| self.atom_count.checked_pow(e))
            .filter(|&c| c <= 1 << 24)
            .ok_or_else(|| {
                Error::UnsupportedCapability(format!(
                    "{}^{} homomorphisms are too many to enumerate",
                    self.atom_count, target.atom_count
                ))
            })?;
        let mut out = Vec::with_capacity(count);
        let mut dual = vec![0usize; target.atom_count];
        loop {
            out.push(BoolHom {
                source: *self,
                target: *target,
                dual_map: dual.clone(),
            });
            // odometer increment, last position fastest
            let mut pos = target.atom_count;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                dual[pos] += 1;
                if dual[pos] < self.atom_count {
                    break;
                }
                dual[pos] = 0;
            }
        }
    }
}

impl fmt::Display for FiniteBooleanAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BA({} atoms)", self.atom_count)
    }
}

/// An element of a finite Boolean algebra: a set of atom indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BAElement {
    algebra: FiniteBooleanAlgebra,
    atoms: BTreeSet<usize>,
}

impl BAElement {
    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.algebra
    }

    pub fn atoms(&self) -> &BTreeSet<usize> {
        &self.atoms
    }

    pub fn contains(&self, atom: usize) -> bool {
        self.atoms.contains(&atom)
    }

    pub fn is_bottom(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_top(&self) -> bool {
        self.atoms.len() == self.algebra.atom_count
    }

    pub fn least_atom(&self) -> Option<usize> {
        self.atoms.iter().next().copied()
    }

    fn same(&self, other: &BAElement) -> Result<()> {
        self.algebra.check(other)
    }

    pub fn meet(&self, other: &BAElement) -> Result<BAElement> {
        self.same(other)?;
        Ok(BAElement {
            algebra: self.algebra,
            atoms: self.atoms.intersection(&other.atoms).copied().collect(),
        })
    }

    pub fn join(&self, other: &BAElement) -> Result<BAElement> {
        self.same(other)?;
        Ok(BAElement {
            algebra: self.algebra,
            atoms: self.atoms.union(&other.atoms).copied().collect(),
        })
    }

    pub fn complement(&self) -> BAElement {
        BAElement {
            algebra: self.algebra,
            atoms: (0..self.algebra.atom_count)
                .filter(|a| !self.atoms.contains(a))
                .collect(),
        }
    }

    pub fn leq(&self, other: &BAElement) -> Result<bool> {
        self.same(other)?;
        Ok(self.atoms.is_subset(&other.atoms))
    }

    pub fn is_disjoint(&self, other: &BAElement) -> Result<bool> {
        self.same(other)?;
        Ok(self.atoms.is_disjoint(&other.atoms))
    }
}

impl fmt::Display for BAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// A Boolean homomorphism `source → target`, stored as its dual map
/// `atoms(target) → atoms(source)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolHom {
    source: FiniteBooleanAlgebra,
    target: FiniteBooleanAlgebra,
    dual_map: Vec<usize>,
}

impl BoolHom {
    pub fn new(
        source: FiniteBooleanAlgebra,
        target: FiniteBooleanAlgebra,
        dual_map: Vec<usize>,
    ) -> Result<Self> {
        if dual_map.len() != target.atom_count {
            return Err(Error::InvalidArgument(format!(
                "dual map has {} entries, target has {} atoms",
                dual_map.len(),
                target.atom_count
            )));
        }
        if let Some(&bad) = dual_map.iter().find(|&&a| a >= source.atom_count) {
            return Err(Error::InvalidArgument(format!(
                "dual map value {bad} out of range for a {}-atom source",
                source.atom_count
            )));
        }
        Ok(BoolHom {
            source,
            target,
            dual_map,
        })
    }

    pub fn identity(algebra: FiniteBooleanAlgebra) -> Self {
        BoolHom {
            source: algebra,
            target: algebra,
            dual_map: (0..algebra.atom_count).collect(),
        }
    }

    pub fn source(&self) -> FiniteBooleanAlgebra {
        self.source
    }

    pub fn target(&self) -> FiniteBooleanAlgebra {
        self.target
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual_map
    }

    pub fn apply(&self, e: &BAElement) -> Result<BAElement> {
        self.source.check(e)?;
        Ok(BAElement {
            algebra: self.target,
            atoms: (0..self.target.atom_count)
                .filter(|&q| e.atoms.contains(&self.dual_map[q]))
                .collect(),
        })
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &BoolHom) -> Result<BoolHom> {
        if inner.target != self.source {
            return Err(Error::TargetMismatch(format!(
                "cannot compose: inner hom lands in {}, outer starts at {}",
                inner.target, self.source
            )));
        }
        Ok(BoolHom {
            source: inner.source,
            target: self.target,
            dual_map: self.dual_map.iter().map(|&q| inner.dual_map[q]).collect(),
        })
    }

    /// Injective iff the dual map is surjective.
    pub fn is_injective(&self) -> bool {
        let hit: BTreeSet<usize> = self.dual_map.iter().copied().collect();
        hit.len() == self.source.atom_count
    }

    /// Surjective iff the dual map is injective.
    pub fn is_surjective(&self) -> bool {
        let hit: BTreeSet<usize> = self.dual_map.iter().copied().collect();
        hit.len() == self.dual_map.len()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}
