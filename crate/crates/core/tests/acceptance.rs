//! Acceptance suite. Each criterion is checked against an oracle written
//! independently of the library (plain integer arithmetic, brute force) and
//! reported as one PASS/FAIL line. All comparisons are exact.

use std::collections::{BTreeSet, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::Command as Process;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use specker::boolean_algebra::{BAElement, FiniteBooleanAlgebra};
use specker::cli;
use specker::functors::{self, ump_lift};
use specker::order::{lattice_hom_check, OrderedContext};
use specker::rings::{Elem, Ring};
use specker::specker::{FormalCombination, DEFAULT_EXHAUSTIVE_LIMIT as LIMIT};
use specker::spectra::{self, HomSpace, MinSpectrum};
use specker::{Error, SpeckerAlgebra, SpeckerElement};

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T>(r: specker::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn alg(ring: Ring, atoms: usize) -> SpeckerAlgebra {
    SpeckerAlgebra::new(ring, FiniteBooleanAlgebra::new(atoms).unwrap())
}

fn residue(e: &Elem) -> u64 {
    match e {
        Elem::Mod(r) => *r,
        other => panic!("expected a residue, got {other}"),
    }
}

fn residues(s: &SpeckerElement) -> Vec<u64> {
    s.values().iter().map(residue).collect()
}

fn modular(s: &SpeckerAlgebra, values: &[u64]) -> SpeckerElement {
    s.element(values.iter().map(|&v| Elem::Mod(v)).collect()).unwrap()
}

fn int(n: i64) -> Elem {
    Elem::Int(BigInt::from(n))
}

/// Small random value of `Z` or `Q`, drawn without the library.
fn ordered_value(ring: &Ring, rng: &mut ChaCha8Rng) -> Elem {
    let p = rng.gen_range(-9i64..=9);
    match ring {
        Ring::Integers => int(p),
        Ring::Rationals => Elem::Rat(BigRational::new(p.into(), rng.gen_range(1i64..=4).into())),
        _ => unreachable!(),
    }
}

fn sign(e: &Elem) -> std::cmp::Ordering {
    let zero = 0i64;
    match e {
        Elem::Int(n) => n.cmp(&BigInt::from(zero)),
        Elem::Rat(q) => q.numer().cmp(&BigInt::from(zero)),
        _ => unreachable!(),
    }
}

// 1. Foster functions agree with pointwise arithmetic.
fn foster_oracle() -> Check {
    let n = 4u64;
    let s = alg(Ring::Modular(n), 2);
    let elements = ok(s.elements())?;
    ensure!(elements.len() == 16, "expected 16 elements");
    let mut pairs = 0;
    for f in &elements {
        let ff = ok(s.to_foster(f))?;
        for g in &elements {
            let fg = ok(s.to_foster(g))?;
            let (a, b) = (residues(f), residues(g));
            let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % n).collect();
            let prod: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x * y) % n).collect();
            let add = ok(s.foster_add(&ff, &fg))?;
            let mul = ok(s.foster_mul(&ff, &fg))?;
            ok(add.validate(&s))?;
            ok(mul.validate(&s))?;
            ensure!(residues(&ok(s.from_foster(&add))?) == sum, "foster_add at {a:?} + {b:?}");
            ensure!(residues(&ok(s.from_foster(&mul))?) == prod, "foster_mul at {a:?} * {b:?}");
            pairs += 1;
        }
    }
    let mut scalars = 0;
    for c in 0..n {
        for f in &elements {
            let scaled = ok(s.foster_scalar(&Elem::Mod(c), &ok(s.to_foster(f))?))?;
            ok(scaled.validate(&s))?;
            let want: Vec<u64> = residues(f).iter().map(|x| (c * x) % n).collect();
            ensure!(residues(&ok(s.from_foster(&scaled))?) == want, "foster_scalar {c}·{f}");
            scalars += 1;
        }
    }
    ensure!(pairs == 256 && scalars == 64, "coverage {pairs} pairs, {scalars} scalar pairs");
    Ok(())
}

// 2. Normal form: evaluation preserved, invariants hold, idempotent.
fn canonicity() -> Check {
    let atoms = 3;
    let s = alg(Ring::Integers, atoms);
    let b = s.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for round in 0..1000 {
        let len = rng.gen_range(0..6);
        let mut terms = Vec::new();
        let mut oracle = vec![BigInt::from(0); atoms];
        for _ in 0..len {
            let coeff: i64 = rng.gen_range(-5..=5);
            let mask: u32 = rng.gen_range(0..8);
            let idem: Vec<usize> = (0..atoms).filter(|i| mask >> i & 1 == 1).collect();
            for &i in &idem {
                oracle[i] += coeff;
            }
            terms.push((int(coeff), b.element(idem).unwrap()));
        }
        let c = FormalCombination::new(terms);
        let form = ok(s.normalize(&c))?;
        let values: Vec<Elem> = oracle.into_iter().map(Elem::Int).collect();
        ensure!(ok(s.to_pointwise(&form))?.values() == values.as_slice(), "round {round}: evaluation changed");
        ensure!(ok(s.evaluate(&c))?.values() == values.as_slice(), "round {round}: evaluate");
        ok(form.validate(&s))?;
        // invariants restated directly
        let parts = form.parts();
        let coeffs: HashSet<&Elem> = parts.iter().map(|(a, _)| a).collect();
        ensure!(coeffs.len() == parts.len(), "round {round}: repeated coefficient");
        ensure!(parts.iter().all(|(a, e)| *a != int(0) && !e.is_bottom()), "round {round}: zero part");
        for (i, (_, e)) in parts.iter().enumerate() {
            for (_, f) in &parts[i + 1..] {
                ensure!(e.atoms().is_disjoint(f.atoms()), "round {round}: overlapping parts");
                ensure!(e.least_atom() < f.least_atom(), "round {round}: unsorted parts");
            }
        }
        let again = ok(s.normalize(&form.clone().into_combination()))?;
        ensure!(again == form, "round {round}: normalize not idempotent");
    }
    Ok(())
}

/// Idempotents of `R^atoms` found without the library: 0/1 vectors over a
/// domain, brute force over finite rings.
fn brute_idempotent_count(ring: &Ring, atoms: usize) -> u128 {
    match ring {
        Ring::Integers | Ring::Rationals => 1 << atoms,
        Ring::Modular(n) => {
            let per_atom = (0..*n).filter(|x| x * x % n == *x).count() as u128;
            per_atom.pow(atoms as u32)
        }
        _ => unreachable!(),
    }
}

// 3. |Id(R[B])| = |Id(R)|^atoms and Id(R[B]) ≅ Id(R) ⊕ B.
fn idempotent_counts() -> Check {
    for ring in [Ring::Integers, Ring::Rationals, Ring::Modular(6), Ring::Modular(12)] {
        let id_r = ok(ring.idempotent_algebra())?;
        for atoms in 1..=3 {
            let s = alg(ring.clone(), atoms);
            let ids = ok(s.idempotent_algebra())?;
            let count = ids.algebra().cardinality().unwrap();
            let expected = (id_r.elements().len() as u128).pow(atoms as u32);
            ensure!(count == expected, "{ring}, {atoms} atoms: {count} ≠ {expected}");
            ensure!(count == brute_idempotent_count(&ring, atoms), "{ring}: brute-force count");
            if count > 4096 {
                continue;
            }
            let (sum, left, right) = id_r.algebra().coproduct(&s.algebra());
            ensure!(sum.atom_count() == ids.algebra().atom_count(), "{ring}: coproduct size");
            // φ: coproduct → Id(S) on atom indices (r, x)
            let phi = |e: &BAElement| ids.to_element(&ids.algebra().element(e.atoms().iter().copied()).unwrap());
            let one = s.one();
            let mut image = HashSet::new();
            let els = sum.elements();
            for e in &els {
                let pe = ok(phi(e))?;
                ensure!(ok(s.is_idempotent(&pe))?, "{ring}: φ(e) not idempotent");
                ensure!(ok(phi(&e.complement()))? == ok(s.sub(&one, &pe))?, "{ring}: complement");
                image.insert(pe);
            }
            ensure!(image.len() as u128 == count, "{ring}, {atoms}: φ not bijective");
            for e in &els {
                let pe = ok(phi(e))?;
                for f in &els {
                    let pf = ok(phi(f))?;
                    let pm = ok(s.mul(&pe, &pf))?;
                    ensure!(ok(phi(&e.meet(f).unwrap()))? == pm, "{ring}: meet");
                    let pj = ok(s.sub(&ok(s.add(&pe, &pf))?, &pm))?;
                    ensure!(ok(phi(&e.join(f).unwrap()))? == pj, "{ring}: join");
                }
            }
            // injections: Id(R) ∋ r ↦ constant r, B ∋ x ↦ y_x
            for r in id_r.algebra().elements() {
                let want = s.constant(&id_r.from_ba(&r));
                ensure!(ok(phi(&ok(left.apply(&r))?))? == want, "{ring}: left injection");
            }
            for x in s.algebra().elements() {
                ensure!(ok(phi(&ok(right.apply(&x))?))? == ok(s.generator(&x))?, "{ring}: right injection");
            }
        }
    }
    Ok(())
}

// 4. Unit and counit are isomorphisms exactly for indecomposable rings.
fn equivalence() -> Check {
    let cases = [
        (Ring::Integers, true),
        (Ring::Rationals, true),
        (Ring::Modular(4), true),
        (Ring::Modular(9), true),
        (Ring::Modular(6), false),
        (Ring::product(Ring::Integers, Ring::Integers), false),
    ];
    for (ring, expected) in cases {
        // oracle: a finite ring is indecomposable iff it has exactly 2 idempotents
        let indecomposable = match &ring {
            Ring::Modular(n) => (0..*n).filter(|x| x * x % n == *x).count() == 2,
            Ring::Product(..) => false,
            _ => true,
        };
        ensure!(indecomposable == expected, "{ring}: oracle disagrees with the expectation");
        for atoms in 1..=3 {
            let uc = ok(functors::unit_counit(FiniteBooleanAlgebra::new(atoms).unwrap(), &ring, LIMIT))?;
            ensure!(uc.unit_is_isomorphism == expected, "{ring}, {atoms}: unit");
            ensure!(uc.counit_is_isomorphism == expected, "{ring}, {atoms}: counit");
            if !expected {
                ensure!(ok(uc.counit.kernel_witness(LIMIT))?.is_some(), "{ring}: no kernel witness");
            }
        }
        let report = ok(functors::equivalence_report(&ring, &[1, 2, 3], LIMIT))?;
        ensure!(report.equivalence_holds == expected, "{ring}: report");
        ensure!(
            report.equivalence_holds == ok(ring.classify())?.is_indecomposable,
            "{ring}: report disagrees with classify"
        );
    }
    Ok(())
}

// 5. Lifted homs are exactly the ring homs R[B] → R.
fn ump_completeness() -> Check {
    let n = 6u64;
    let s = alg(Ring::Modular(n), 2);
    let base = SpeckerAlgebra::base(Ring::Modular(n));
    let ids = ok(base.idempotent_algebra())?;
    let sigmas = ok(s.algebra().enumerate_homs(&ids.algebra()))?;
    ensure!(sigmas.len() == 4, "expected 4 Boolean homs, got {}", sigmas.len());
    let elements = ok(s.elements())?;
    ensure!(elements.len() == 36, "carrier");
    let mut lifted = BTreeSet::new();
    for sigma in &sigmas {
        let alpha = ok(ump_lift(&s, &base, sigma))?;
        ensure!(ok(alpha.apply(&s.one()))? == base.one(), "lift not unital");
        for x in &elements {
            for y in &elements {
                let (ax, ay) = (ok(alpha.apply(x))?, ok(alpha.apply(y))?);
                ensure!(ok(alpha.apply(&ok(s.add(x, y))?))? == ok(base.add(&ax, &ay))?, "lift not additive");
                ensure!(ok(alpha.apply(&ok(s.mul(x, y))?))? == ok(base.mul(&ax, &ay))?, "lift not multiplicative");
            }
        }
        // the lift restricts to σ on generators
        for e in s.algebra().elements() {
            let img = ok(alpha.apply(&ok(s.generator(&e))?))?;
            ensure!(img == ok(ids.to_element(&ok(sigma.apply(&e))?))?, "lift does not extend σ");
        }
        let u = residue(ok(alpha.apply(&s.atom_indicator(0)))?.value(0));
        let v = residue(ok(alpha.apply(&s.atom_indicator(1)))?.value(0));
        lifted.insert((u, v));
    }
    // oracle: additive maps (a, b) ↦ a·u + b·v, searched for unital multiplicative ones
    let mut found = BTreeSet::new();
    for u in 0..n {
        for v in 0..n {
            let f = |a: u64, b: u64| (a * u + b * v) % n;
            let unital = f(1, 1) == 1;
            let multiplicative = (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| (0..n).all(|d| f(a * c % n, b * d % n) == f(a, b) * f(c, d) % n))
                })
            });
            if unital && multiplicative {
                found.insert((u, v));
            }
        }
    }
    ensure!(found.len() == 4, "oracle found {} homs", found.len());
    ensure!(found == lifted, "lifted {lifted:?}, oracle {found:?}");
    Ok(())
}

// 6. Annihilators are generated by idempotents exactly when R is weak Baer.
fn annihilators() -> Check {
    let n = 6u64;
    let s = alg(Ring::Modular(n), 2);
    let elements = ok(s.elements())?;
    let vals: Vec<Vec<u64>> = elements.iter().map(residues).collect();
    for x in &elements {
        let xv = residues(x);
        let e = ok(spectra::annihilator(&s, x))?;
        let ev = residues(&e);
        ensure!(ev.iter().all(|a| a * a % n == *a), "witness for {x} not idempotent");
        let ann: BTreeSet<&Vec<u64>> = vals
            .iter()
            .filter(|t| t.iter().zip(&xv).all(|(a, b)| a * b % n == 0))
            .collect();
        let principal: BTreeSet<Vec<u64>> = vals
            .iter()
            .map(|t| t.iter().zip(&ev).map(|(a, b)| a * b % n).collect())
            .collect();
        ensure!(ann.into_iter().cloned().collect::<BTreeSet<_>>() == principal, "ann({x}) ≠ eS");
        ensure!(ok(spectra::verify_annihilator(&s, std::slice::from_ref(x), &e, &elements))?, "verify_annihilator({x})");
    }
    let z4 = alg(Ring::Modular(4), 1);
    match spectra::annihilator(&z4, &modular(&z4, &[2])) {
        Err(Error::NotWeakBaerAt(Elem::Mod(2))) => {}
        other => return Err(format!("Z/4: expected NotWeakBaerAt(2), got {other:?}")),
    }
    ensure!(ok(spectra::baer_report(&s))?.baer, "Z/6 not flagged Baer");
    ensure!(ok(spectra::baer_report(&alg(Ring::Integers, 2)))?.baer, "Z not flagged Baer");
    let r = ok(spectra::baer_report(&z4))?;
    ensure!(!r.weak_baer && r.witness_failure == Some(Elem::Mod(2)), "Z/4 report {r:?}");
    Ok(())
}

// 7. Hom space, minimal primes and zero sets over Z.
fn spectra_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let scalars: Vec<Elem> = (-10..=10).filter(|&a| a != 0).map(int).collect();
    for atoms in 1..=3 {
        let s = alg(Ring::Integers, atoms);
        let homs = ok(HomSpace::new(&s))?;
        let spec = ok(MinSpectrum::new(&s))?;
        ensure!(homs.points().len() == atoms, "|Hom| = {} at {atoms}", homs.points().len());
        ensure!(spec.primes().len() == atoms, "|Min| = {} at {atoms}", spec.primes().len());
        let hit: BTreeSet<usize> = (0..atoms).filter_map(|i| spec.hom_space().point_atom(i)).collect();
        ensure!(hit.len() == atoms, "φ not a bijection onto the atoms");
        ensure!(ok(spec.meets_ring_trivially(&scalars))?, "P ∩ R ≠ 0");
        for _ in 0..200 {
            let values: Vec<Elem> = (0..atoms)
                .map(|_| if rng.gen_bool(0.4) { int(0) } else { int(rng.gen_range(-9..=9)) })
                .collect();
            let x = ok(s.element(values.clone()))?;
            ensure!(ok(spec.phi_matches(&x))?, "Z(s) ≠ φ(U_s) at {x}");
            ensure!(ok(homs.zero_set_matches_parts(&x))?, "U_s ≠ ∩ U_e at {x}");
            let oracle: BTreeSet<usize> = (0..atoms).filter(|&i| values[i] == int(0)).collect();
            let zs: BTreeSet<usize> = ok(homs.zero_set(&x))?
                .into_iter()
                .map(|i| homs.point_atom(i).unwrap())
                .collect();
            ensure!(zs == oracle, "U_s at {x}");
            for (i, p) in spec.primes().iter().enumerate() {
                let atom = spec.hom_space().point_atom(i).unwrap();
                ensure!(ok(p.contains(&x))? == (values[atom] == int(0)), "membership in P_{i}");
            }
        }
    }
    Ok(())
}

// 8. Order: f-ring law, lattice identities, positivity, ℓ-homs.
fn order_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for ring in [Ring::Integers, Ring::Rationals] {
        for atoms in [2, 3] {
            let s = alg(ring.clone(), atoms);
            let o = ok(OrderedContext::new(&s))?;
            let zero = match ring {
                Ring::Integers => int(0),
                _ => Elem::Rat(BigRational::from_integer(0.into())),
            };
            let abs = |e: Elem| if sign(&e).is_lt() { ring.neg(&e) } else { e };
            let mut nonvacuous = 0;
            for _ in 0..1000 {
                // disjoint supports with nonnegative values give a ∧ b = 0
                let (mut a, mut b) = (Vec::new(), Vec::new());
                for _ in 0..atoms {
                    let v = abs(ordered_value(&ring, &mut rng));
                    match rng.gen_range(0..3) {
                        0 => (a.push(v), b.push(zero.clone())),
                        1 => (a.push(zero.clone()), b.push(v)),
                        _ => (a.push(zero.clone()), b.push(zero.clone())),
                    };
                }
                let c: Vec<Elem> = (0..atoms).map(|_| abs(ordered_value(&ring, &mut rng))).collect();
                let r = ok(o.f_ring_axiom_check(&ok(s.element(a))?, &ok(s.element(b))?, &ok(s.element(c))?))?;
                ensure!(r.holds, "f-ring law failed");
                nonvacuous += usize::from(!r.vacuous);
            }
            ensure!(nonvacuous == 1000, "only {nonvacuous} non-vacuous triples");
            for _ in 0..1000 {
                let f = ok(s.element((0..atoms).map(|_| ordered_value(&ring, &mut rng)).collect()))?;
                let g = ok(s.element((0..atoms).map(|_| ordered_value(&ring, &mut rng)).collect()))?;
                ensure!(ok(o.lattice_identities_hold(&f, &g))?, "2(f∨g) identity at {f}, {g}");
            }
            let grid: Vec<Vec<i64>> = (0..atoms).fold(vec![vec![]], |acc, _| {
                acc.into_iter()
                    .flat_map(|p| (-3..=3).map(move |v| [p.clone(), vec![v]].concat()))
                    .collect()
            });
            ensure!(grid.len() == 7usize.pow(atoms as u32), "grid size");
            for point in &grid {
                let values: Vec<Elem> = point
                    .iter()
                    .map(|&v| match ring {
                        Ring::Integers => int(v),
                        _ => Elem::Rat(BigRational::from_integer(v.into())),
                    })
                    .collect();
                let f = ok(s.element(values))?;
                let oracle = point.iter().all(|&v| v >= 0);
                ensure!(ok(o.is_positive_orthogonal(&f))? == oracle, "coefficient positivity at {point:?}");
                ensure!(ok(o.is_positive(&f))? == oracle, "pointwise positivity at {point:?}");
            }
            let pairs: Vec<(SpeckerElement, SpeckerElement)> = (0..500)
                .map(|_| {
                    let f = s.element((0..atoms).map(|_| ordered_value(&ring, &mut rng)).collect());
                    let g = s.element((0..atoms).map(|_| ordered_value(&ring, &mut rng)).collect());
                    (f.unwrap(), g.unwrap())
                })
                .collect();
            let mut checked = 0;
            for t in [SpeckerAlgebra::base(ring.clone()), alg(ring.clone(), 2)] {
                for h in ok(functors::enumerate_algebra_homs(&s, &t))? {
                    ensure!(ok(lattice_hom_check(&h, &pairs))?, "ℓ-hom check failed");
                    checked += 1;
                }
            }
            ensure!(checked == atoms + atoms * atoms, "enumerated {checked} homs");
        }
    }
    Ok(())
}

// 9. Atom indicators form a free basis; S is torsion-free over a domain.
fn module_invariants() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for ring in [Ring::Integers, Ring::Modular(6)] {
        let s = alg(ring.clone(), 3);
        for _ in 0..1000 {
            let coords: Vec<Elem> = (0..3)
                .map(|_| match ring {
                    Ring::Integers => int(rng.gen_range(-50..=50)),
                    _ => Elem::Mod(rng.gen_range(0..6)),
                })
                .collect();
            let combo = ok(s.sum(
                &(0..3)
                    .map(|x| s.scale(&coords[x], &s.atom_indicator(x)))
                    .collect::<specker::Result<Vec<_>>>()
                    .map_err(|e| e.to_string())?,
            ))?;
            // the coordinates are recovered, so they are unique
            ensure!(combo.values() == coords.as_slice(), "coordinates not recovered for {coords:?}");
            ensure!(s.is_zero(&combo) == coords.iter().all(|c| ring.is_zero(c)), "dependence relation");
        }
    }
    let n = 5u64;
    let s = alg(Ring::Modular(n), 2);
    let mut pairs = 0;
    for a in 1..n {
        for x in ok(s.elements())? {
            if s.is_zero(&x) {
                continue;
            }
            let ax = ok(s.scale(&Elem::Mod(a), &x))?;
            ensure!(residues(&ax).iter().any(|&v| v != 0), "torsion: {a}·{x} = 0");
            pairs += 1;
        }
    }
    ensure!(pairs == 4 * 24, "covered {pairs} pairs");
    let z = alg(Ring::Integers, 2);
    for _ in 0..1000 {
        let a = loop {
            let a = rng.gen_range(-20i64..=20);
            if a != 0 {
                break a;
            }
        };
        let x = z.random_element(&mut rng, 20);
        if z.is_zero(&x) {
            continue;
        }
        ensure!(!z.is_zero(&ok(z.scale(&int(a), &x))?), "torsion over Z");
    }
    Ok(())
}

// 10. A second faithful generating algebra over Z/6 and the quotients.
fn faithful_generating() -> Check {
    let n = 6u64;
    let s = alg(Ring::Modular(n), 2);
    let g = modular(&s, &[3, 4]);
    let closure = ok(s.idempotent_closure(std::slice::from_ref(&g)))?;
    let members: BTreeSet<Vec<u64>> = ok(closure.elements(&s))?.iter().map(residues).collect();
    let expected: BTreeSet<Vec<u64>> = [[0, 0], [3, 4], [4, 3], [1, 1]].iter().map(|v| v.to_vec()).collect();
    ensure!(members == expected, "closure {members:?}");
    let canonical: BTreeSet<Vec<u64>> = s.canonical_generators().iter().map(residues).collect();
    ensure!(canonical != members, "closure equals the canonical algebra");
    ensure!(closure.algebra().is_isomorphic(&s.algebra()), "closure not isomorphic to B");
    ensure!(ok(s.is_faithful_generating(std::slice::from_ref(&g), LIMIT))?, "not faithful generating");
    // oracle: faithful members and span, by hand
    for m in &members {
        if m.iter().all(|&v| v == 0) {
            continue;
        }
        let faithful = (1..n).all(|a| m.iter().any(|v| a * v % n != 0));
        ensure!(faithful, "{m:?} not faithful");
    }
    let span: HashSet<(u64, u64)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((3 * a + 4 * b) % n, (4 * a + 3 * b) % n)))
        .collect();
    ensure!(span.len() == 36, "span has {} elements", span.len());
    for p in [2, 3] {
        let q = ok(s.quotient_mod_prime(&Elem::Mod(p)))?;
        ensure!(*q.target().ring() == Ring::Modular(p), "S/PS ring for P = ({p})");
        let atoms = ok(q.target().idempotent_algebra())?.algebra().atom_count();
        ensure!(atoms == s.atom_count(), "Id(S/PS) has {atoms} atoms for P = ({p})");
    }
    Ok(())
}

// 11. The binary reproduces the frozen responses byte for byte.
fn golden() -> Check {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut seen = BTreeSet::new();
    for command in cli::Command::ALL {
        let name = command.name();
        let request = dir.join(format!("{name}.request.json"));
        let expected = std::fs::read_to_string(dir.join(format!("{name}.response.json")))
            .map_err(|e| format!("{name}: {e}"))?;
        for _ in 0..2 {
            let out = Process::new(env!("CARGO_BIN_EXE_specker"))
                .arg("--in")
                .arg(&request)
                .output()
                .map_err(|e| e.to_string())?;
            ensure!(out.status.success(), "{name}: exit status {}", out.status);
            ensure!(String::from_utf8_lossy(&out.stdout) == expected, "{name}: output differs");
        }
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&request).unwrap()).unwrap();
        let args = <cli::Args as clap::Parser>::parse_from(["specker"]);
        let outcome = cli::run(&args, &doc);
        ensure!(outcome.exit_code == 0 && outcome.render() == expected, "{name}: in-process output differs");
        ensure!(doc["command"] == name, "{name}: request names another command");
        seen.insert(name);
    }
    ensure!(seen.len() == 12, "covered {} commands", seen.len());
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    check: fn() -> Check,
}

const fn criterion(id: u32, name: &'static str, budget_ms: u64, check: fn() -> Check) -> Criterion {
    Criterion {
        id,
        name,
        budget: Duration::from_millis(budget_ms),
        check,
    }
}

fn main() {
    let criteria = [
        criterion(1, "foster functions match pointwise arithmetic", 1_000, foster_oracle),
        criterion(2, "orthogonal normal form", 2_000, canonicity),
        criterion(3, "idempotent counts and coproduct", 5_000, idempotent_counts),
        criterion(4, "unit and counit", 5_000, equivalence),
        criterion(5, "hom lifting is complete and unique", 10_000, ump_completeness),
        criterion(6, "annihilators and Baer classification", 5_000, annihilators),
        criterion(7, "hom space and minimal primes", 3_000, spectra_suite),
        criterion(8, "f-algebra order", 15_000, order_suite),
        criterion(9, "free basis and torsion-freeness", 2_000, module_invariants),
        criterion(10, "faithful generating algebras and quotients", 3_000, faithful_generating),
        criterion(11, "CLI golden outputs", 2_000, golden),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| c.name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed <= c.budget {
                Ok(())
            } else {
                Err(format!("took {elapsed:?}, budget {:?}", c.budget))
            }
        });
        match result {
            Ok(()) => println!("criterion {:>2} PASS  {} ({} ms)", c.id, c.name, elapsed.as_millis()),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {}: {e}", c.id, c.name);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
