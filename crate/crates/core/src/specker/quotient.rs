use crate::error::Result;
use crate::rings::{Elem, RingQuotient};

use super::{SpeckerAlgebra, SpeckerElement};

/// `S → S/PS ≅ (R/P)[B]` for a principal prime `P` of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeckerQuotient {
    source: SpeckerAlgebra,
    target: SpeckerAlgebra,
    ring_map: RingQuotient,
}

impl SpeckerQuotient {
    pub fn source(&self) -> &SpeckerAlgebra {
        &self.source
    }

    pub fn target(&self) -> &SpeckerAlgebra {
        &self.target
    }

    /// Reduces every value modulo `P`.
    pub fn reduce(&self, s: &SpeckerElement) -> Result<SpeckerElement> {
        self.source.check(s)?;
        self.target
            .element(s.values().iter().map(|v| self.ring_map.reduce(v)).collect())
    }
}

impl SpeckerAlgebra {
    pub fn quotient_mod_prime(&self, p: &Elem) -> Result<SpeckerQuotient> {
        let ring_map = self.ring().quotient_by_prime(p)?;
        Ok(SpeckerQuotient {
            source: self.clone(),
            target: SpeckerAlgebra::new(ring_map.target().clone(), self.algebra()),
            ring_map,
        })
    }
}
