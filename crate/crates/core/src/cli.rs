//! JSON front end.
//!
//! A request names a command, a ring descriptor, an atom count and a
//! command-specific `args` object. It can be given entirely through flags,
//! entirely as a JSON document on `--in`, or mixed; flags win. Responses are
//! pretty-printed JSON with sorted keys, so identical requests produce
//! byte-identical output.
//!
//! Wire format:
//!
//! * rings: `{"kind":"Z"}`, `{"kind":"Q"}`, `{"kind":"Zmod","modulus":6}`,
//!   `{"kind":"product","left":…,"right":…}`;
//! * scalars: decimal strings, `"p/q"` over `Q`, `[left, right]` over products;
//! * elements: `{"pointwise":[…]}` or `{"orthogonal":[{"coeff":…,"idem":[…]}…]}`;
//! * Boolean homs: `{"dual_map":[…]}`.

use std::fmt;
use std::io::{self, Read, Write};
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::boolean_algebra::{BAElement, BoolHom, FiniteBooleanAlgebra};
use crate::error::{Error, Result};
use crate::functors::{self, AlgebraHom};
use crate::order::OrderedContext;
use crate::rings::{Elem, Ring};
use crate::specker::{
    Coverage, FormalCombination, SpeckerAlgebra, SpeckerElement, DEFAULT_EXHAUSTIVE_LIMIT,
};
use crate::spectra;

/// Random elements used when a carrier exceeds the exhaustive limit.
const SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Normalize,
    Arith,
    Idempotents,
    Faithful,
    Homs,
    Minspec,
    Ann,
    Baer,
    Hull,
    Lattice,
    EquivalenceReport,
    Quotient,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::Normalize,
        Command::Arith,
        Command::Idempotents,
        Command::Faithful,
        Command::Homs,
        Command::Minspec,
        Command::Ann,
        Command::Baer,
        Command::Hull,
        Command::Lattice,
        Command::EquivalenceReport,
        Command::Quotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Normalize => "normalize",
            Command::Arith => "arith",
            Command::Idempotents => "idempotents",
            Command::Faithful => "faithful",
            Command::Homs => "homs",
            Command::Minspec => "minspec",
            Command::Ann => "ann",
            Command::Baer => "baer",
            Command::Hull => "hull",
            Command::Lattice => "lattice",
            Command::EquivalenceReport => "equivalence-report",
            Command::Quotient => "quotient",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::parse("$.command", format!("unknown command {s:?}")))
    }
}

#[derive(Clone, Debug, Parser)]
#[command(name = "specker", version, about = "Exact computations in Boolean powers of commutative rings")]
pub struct Args {
    #[arg(long, value_enum)]
    pub command: Option<Command>,
    /// Ring descriptor as JSON, e.g. '{"kind":"Zmod","modulus":6}'.
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(long)]
    pub atoms: Option<usize>,
    /// Request document: a file path or `-` for stdin.
    #[arg(long = "in")]
    pub input: Option<String>,
    /// Output destination: a file path or `-` for stdout.
    #[arg(long = "out", default_value = "-")]
    pub output: String,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub exhaustive_limit: Option<u128>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Request {
    pub command: Command,
    pub ring: Ring,
    pub atoms: Option<usize>,
    pub args: Value,
    pub seed: u64,
    pub exhaustive_limit: u128,
}

impl Request {
    fn algebra(&self) -> Result<SpeckerAlgebra> {
        let n = self
            .atoms
            .ok_or_else(|| Error::parse("$.atoms", "missing atom count"))?;
        let b = FiniteBooleanAlgebra::new(n).map_err(|e| Error::parse("$.atoms", e.to_string()))?;
        Ok(SpeckerAlgebra::new(self.ring.clone(), b))
    }

    fn arg(&self, key: &str) -> Option<&Value> {
        self.args.get(key)
    }

    fn required(&self, key: &str) -> Result<(&Value, String)> {
        let path = format!("$.args.{key}");
        match self.arg(key) {
            Some(v) => Ok((v, path)),
            None => Err(Error::parse(path, "missing field")),
        }
    }
}

/// Builds a request from an optional JSON document, with flags taking
/// precedence over document fields.
pub fn parse_request(doc: &Value, args: &Args) -> Result<Request> {
    if !doc.is_object() && !doc.is_null() {
        return Err(Error::parse("$", "request must be an object"));
    }
    let command = match args.command {
        Some(c) => c,
        None => match doc.get("command") {
            Some(Value::String(s)) => s.parse()?,
            Some(_) => return Err(Error::parse("$.command", "expected a string")),
            None => return Err(Error::parse("$.command", "missing command")),
        },
    };
    let ring = match &args.ring {
        Some(text) => {
            let v: Value = serde_json::from_str(text)
                .map_err(|e| Error::parse("--ring", e.to_string()))?;
            parse_ring(&v, "--ring")?
        }
        None => match doc.get("ring") {
            Some(v) => parse_ring(v, "$.ring")?,
            None => return Err(Error::parse("$.ring", "missing ring descriptor")),
        },
    };
    let atoms = match args.atoms {
        Some(n) => Some(n),
        None => doc
            .get("atoms")
            .map(|v| parse_usize(v, "$.atoms"))
            .transpose()?,
    };
    let seed = match args.seed {
        Some(s) => s,
        None => doc
            .get("seed")
            .map(|v| parse_usize(v, "$.seed").map(|s| s as u64))
            .transpose()?
            .unwrap_or(0),
    };
    let exhaustive_limit = match args.exhaustive_limit {
        Some(l) => l,
        None => doc
            .get("exhaustive_limit")
            .map(|v| parse_usize(v, "$.exhaustive_limit").map(|l| l as u128))
            .transpose()?
            .unwrap_or(DEFAULT_EXHAUSTIVE_LIMIT),
    };
    let body = doc.get("args").cloned().unwrap_or(Value::Object(Map::new()));
    if !body.is_object() {
        return Err(Error::parse("$.args", "expected an object"));
    }
    Ok(Request {
        command,
        ring,
        atoms,
        args: body,
        seed,
        exhaustive_limit,
    })
}

/// Result of one invocation: the JSON document to emit and the exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub output: Value,
    pub exit_code: i32,
}

impl Outcome {
    /// The exact bytes written by the binary.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.output).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

pub fn error_object(e: &Error) -> Value {
    json!({"error": {"code": e.code(), "message": e.to_string()}})
}

/// Parses and runs a request; parse failures exit with 2, other errors with 1.
pub fn run(args: &Args, doc: &Value) -> Outcome {
    let result = parse_request(doc, args).and_then(|req| execute(&req));
    match result {
        Ok(output) => Outcome {
            output,
            exit_code: 0,
        },
        Err(e) => Outcome {
            output: error_object(&e),
            exit_code: if matches!(e, Error::Parse { .. }) { 2 } else { 1 },
        },
    }
}

/// Entry point of the binary: reads `--in`, runs and writes `--out`.
pub fn main_with(args: &Args) -> i32 {
    let outcome = match read_document(args.input.as_deref()) {
        Ok(doc) => run(args, &doc),
        Err(e) => Outcome {
            output: error_object(&e),
            exit_code: 2,
        },
    };
    let text = outcome.render();
    let written = if args.output == "-" {
        io::stdout().write_all(text.as_bytes())
    } else {
        std::fs::write(&args.output, text.as_bytes())
    };
    match written {
        Ok(()) => outcome.exit_code,
        Err(e) => {
            eprintln!("specker: cannot write output: {e}");
            1
        }
    }
}

fn read_document(input: Option<&str>) -> Result<Value> {
    let text = match input {
        None => return Ok(Value::Null),
        Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::parse("--in", e.to_string()))?;
            s
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::parse("--in", format!("{path}: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| {
        Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })
}

pub fn execute(req: &Request) -> Result<Value> {
    match req.command {
        Command::Normalize => cmd_normalize(req),
        Command::Arith => cmd_arith(req),
        Command::Idempotents => cmd_idempotents(req),
        Command::Faithful => cmd_faithful(req),
        Command::Homs => cmd_homs(req),
        Command::Minspec => cmd_minspec(req),
        Command::Ann => cmd_ann(req),
        Command::Baer => cmd_baer(req),
        Command::Hull => cmd_hull(req),
        Command::Lattice => cmd_lattice(req),
        Command::EquivalenceReport => cmd_equivalence(req),
        Command::Quotient => cmd_quotient(req),
    }
}

fn cmd_normalize(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let element = match req.arg("terms") {
        Some(terms) => {
            let c = parse_combination(&s, terms, "$.args.terms")?;
            s.to_pointwise(&s.normalize(&c)?)?
        }
        None => {
            let (v, path) = req.required("element")?;
            parse_element(&s, v, &path)?
        }
    };
    Ok(json!({"element": element_to_json(&s, &element)?}))
}

fn cmd_arith(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let (op, op_path) = req.required("op")?;
    let left = || -> Result<SpeckerElement> {
        let (v, p) = req.required("left")?;
        parse_element(&s, v, &p)
    };
    let right = || -> Result<SpeckerElement> {
        let (v, p) = req.required("right")?;
        parse_element(&s, v, &p)
    };
    let result = match op.as_str() {
        Some("add") => s.add(&left()?, &right()?)?,
        Some("sub") => s.sub(&left()?, &right()?)?,
        Some("mul") => s.mul(&left()?, &right()?)?,
        Some("neg") => s.neg(&left()?)?,
        Some("scale") => {
            let (v, p) = req.required("scalar")?;
            s.scale(&parse_elem(s.ring(), v, &p)?, &left()?)?
        }
        _ => return Err(Error::parse(op_path, "expected one of add, sub, mul, neg, scale")),
    };
    Ok(json!({"element": element_to_json(&s, &result)?}))
}

fn cmd_idempotents(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let ids = s.idempotent_algebra()?;
    let b = ids.algebra();
    let atoms = (0..b.atom_count())
        .map(|k| element_to_json(&s, &ids.atom_element(k)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Map::new();
    out.insert(
        "ring_idempotents".into(),
        Value::Array(ids.ring_idempotents().elements().iter().map(elem_to_json).collect()),
    );
    out.insert("id_atoms".into(), json!(b.atom_count()));
    out.insert("count".into(), count_to_json(b.cardinality()));
    out.insert("atoms".into(), Value::Array(atoms));
    if let Some(gens) = req.arg("generators") {
        let gens = parse_element_list(&s, gens, "$.args.generators")?;
        let closure = s.idempotent_closure(&gens)?;
        let blocks = closure
            .blocks
            .iter()
            .map(|e| element_to_json(&s, e))
            .collect::<Result<Vec<_>>>()?;
        out.insert("closure_atoms".into(), Value::Array(blocks));
    }
    Ok(Value::Object(out))
}

fn cmd_faithful(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let mut out = Map::new();
    if let Some(v) = req.arg("element") {
        let e = parse_element(&s, v, "$.args.element")?;
        let idempotent = s.is_idempotent(&e)?;
        out.insert("idempotent".into(), json!(idempotent));
        out.insert(
            "faithful".into(),
            json!(idempotent && s.is_faithful(&e)?),
        );
    }
    if let Some(v) = req.arg("generators") {
        let gens = parse_element_list(&s, v, "$.args.generators")?;
        out.insert(
            "faithful_generating".into(),
            json!(s.is_faithful_generating(&gens, req.exhaustive_limit)?),
        );
    }
    if out.is_empty() {
        return Err(Error::parse("$.args", "expected element or generators"));
    }
    Ok(Value::Object(out))
}

fn cmd_homs(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let target = match req.arg("target") {
        None => SpeckerAlgebra::base(req.ring.clone()),
        Some(Value::String(t)) if t == "ring" => SpeckerAlgebra::base(req.ring.clone()),
        Some(v @ Value::Object(_)) => {
            let n = parse_usize(
                v.get("atoms").ok_or_else(|| Error::parse("$.args.target.atoms", "missing field"))?,
                "$.args.target.atoms",
            )?;
            let b = FiniteBooleanAlgebra::new(n)
                .map_err(|e| Error::parse("$.args.target.atoms", e.to_string()))?;
            SpeckerAlgebra::new(req.ring.clone(), b)
        }
        Some(_) => return Err(Error::parse("$.args.target", "expected \"ring\" or {\"atoms\": n}")),
    };
    let homs = functors::enumerate_algebra_homs(&s, &target)?;
    let listed = homs
        .iter()
        .map(|h| {
            let mut v = hom_to_json(h)?;
            if target.atom_count() == 1 {
                v["evaluation_at"] = json!(evaluation_atom(h));
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "target": {"ring": ring_to_json(target.ring()), "atoms": target.atom_count()},
        "count": homs.len(),
        "homs": listed,
    }))
}

/// The atom `x` with `α = ev_x`, if `α` is a point evaluation.
fn evaluation_atom(h: &AlgebraHom) -> Option<usize> {
    let ring = h.target().ring();
    let images = h.generator_images();
    let ones: Vec<usize> = (0..images.len())
        .filter(|&x| images[x].value(0) == &ring.one())
        .collect();
    let rest_zero = images
        .iter()
        .all(|im| ring.is_zero(im.value(0)) || im.value(0) == &ring.one());
    match ones.as_slice() {
        [x] if rest_zero => Some(*x),
        _ => None,
    }
}

fn cmd_minspec(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let spec = spectra::MinSpectrum::new(&s)?;
    let primes: Vec<Value> = (0..spec.primes().len())
        .map(|i| json!({"evaluation_at": spec.hom_space().point_atom(i)}))
        .collect();
    let mut out = Map::new();
    out.insert("count".into(), json!(primes.len()));
    out.insert("primes".into(), Value::Array(primes));
    if let Some(v) = req.arg("element") {
        let e = parse_element(&s, v, "$.args.element")?;
        out.insert(
            "zero_locus".into(),
            json!(spec.zero_locus(&e)?.into_iter().collect::<Vec<_>>()),
        );
        out.insert("zero_set".into(), json!(spec.hom_space().zero_set(&e)?.into_iter().collect::<Vec<_>>()));
    }
    Ok(Value::Object(out))
}

fn cmd_ann(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let set = match (req.arg("element"), req.arg("elements")) {
        (Some(v), None) => vec![parse_element(&s, v, "$.args.element")?],
        (None, Some(v)) => parse_element_list(&s, v, "$.args.elements")?,
        _ => return Err(Error::parse("$.args", "expected exactly one of element, elements")),
    };
    let e = spectra::annihilator_of_set(&s, &set)?;
    let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
    let (check, coverage) = spectra::annihilator_check_set(&s, req.exhaustive_limit, SAMPLES, &mut rng)?;
    Ok(json!({
        "annihilator": element_to_json(&s, &e)?,
        "verified": spectra::verify_annihilator(&s, &set, &e, &check)?,
        "coverage": coverage_to_json(coverage),
    }))
}

fn cmd_baer(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let r = spectra::baer_report(&s)?;
    Ok(json!({
        "weak_baer": r.weak_baer,
        "witness_failure": r.witness_failure.as_ref().map(elem_to_json),
        "id_complete": r.id_complete,
        "baer": r.baer,
    }))
}

fn cmd_hull(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let h = spectra::injective_hull(&s)?;
    Ok(json!({
        "hull": {"ring": ring_to_json(h.hull.ring()), "atoms": h.hull.atom_count()},
        "embedding": hom_to_json(&h.embedding)?,
        "is_isomorphism": h.embedding.is_isomorphism(req.exhaustive_limit)?,
    }))
}

fn cmd_lattice(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let o = OrderedContext::new(&s)?;
    let (op, op_path) = req.required("op")?;
    let get = |key: &str| -> Result<SpeckerElement> {
        let (v, p) = req.required(key)?;
        parse_element(&s, v, &p)
    };
    Ok(match op.as_str() {
        Some("join") => json!({"element": element_to_json(&s, &o.join(&get("left")?, &get("right")?)?)?}),
        Some("meet") => json!({"element": element_to_json(&s, &o.meet(&get("left")?, &get("right")?)?)?}),
        Some("abs") => json!({"element": element_to_json(&s, &o.abs(&get("left")?)?)?}),
        Some("leq") => json!({"leq": o.leq(&get("left")?, &get("right")?)?}),
        Some("positive") => {
            let f = get("left")?;
            json!({
                "pointwise": o.is_positive(&f)?,
                "orthogonal": o.is_positive_orthogonal(&f)?,
            })
        }
        Some("f_ring") => {
            let r = o.f_ring_axiom_check(&get("left")?, &get("right")?, &get("third")?)?;
            json!({"holds": r.holds, "vacuous": r.vacuous})
        }
        _ => {
            return Err(Error::parse(
                op_path,
                "expected one of join, meet, abs, leq, positive, f_ring",
            ))
        }
    })
}

fn cmd_equivalence(req: &Request) -> Result<Value> {
    let sizes = match req.arg("sizes") {
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| parse_usize(v, &format!("$.args.sizes[{i}]")))
            .collect::<Result<Vec<_>>>()?,
        Some(_) => return Err(Error::parse("$.args.sizes", "expected an array")),
        None => match req.atoms {
            Some(n) => vec![n],
            None => vec![1, 2, 3],
        },
    };
    let r = functors::equivalence_report(&req.ring, &sizes, req.exhaustive_limit)?;
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "atoms": row.atoms,
                "unit_is_isomorphism": row.unit_is_isomorphism,
                "counit_is_isomorphism": row.counit_is_isomorphism,
            })
        })
        .collect();
    Ok(json!({
        "ring": ring_to_json(&r.ring),
        "rows": rows,
        "equivalence_holds": r.equivalence_holds,
        "is_indecomposable": r.is_indecomposable,
    }))
}

fn cmd_quotient(req: &Request) -> Result<Value> {
    let s = req.algebra()?;
    let (v, path) = req.required("prime")?;
    let p = parse_elem(s.ring(), v, &path)?;
    let q = s.quotient_mod_prime(&p)?;
    let t = q.target();
    let mut out = Map::new();
    out.insert("target_ring".into(), ring_to_json(t.ring()));
    out.insert("id_atoms".into(), json!(t.idempotent_algebra()?.algebra().atom_count()));
    if let Some(v) = req.arg("element") {
        let e = parse_element(&s, v, "$.args.element")?;
        out.insert("reduced".into(), element_to_json(t, &q.reduce(&e)?)?);
    }
    Ok(Value::Object(out))
}

// ---- encoding ----

pub fn ring_to_json(r: &Ring) -> Value {
    match r {
        Ring::Integers => json!({"kind": "Z"}),
        Ring::Rationals => json!({"kind": "Q"}),
        Ring::Modular(n) => json!({"kind": "Zmod", "modulus": n}),
        Ring::Product(l, r) => json!({"kind": "product", "left": ring_to_json(l), "right": ring_to_json(r)}),
    }
}

pub fn elem_to_json(a: &Elem) -> Value {
    match a {
        Elem::Int(n) => Value::String(n.to_string()),
        Elem::Rat(q) if q.denom().is_one() => Value::String(q.numer().to_string()),
        Elem::Rat(q) => Value::String(format!("{}/{}", q.numer(), q.denom())),
        Elem::Mod(r) => Value::String(r.to_string()),
        Elem::Pair(l, r) => json!([elem_to_json(l), elem_to_json(r)]),
    }
}

fn ba_to_json(e: &BAElement) -> Value {
    json!(e.atoms().iter().collect::<Vec<_>>())
}

/// Both representations: the canonical orthogonal form and the values.
pub fn element_to_json(s: &SpeckerAlgebra, e: &SpeckerElement) -> Result<Value> {
    let form = s.from_pointwise(e)?;
    let parts: Vec<Value> = form
        .parts()
        .iter()
        .map(|(a, idem)| json!({"coeff": elem_to_json(a), "idem": ba_to_json(idem)}))
        .collect();
    Ok(json!({
        "orthogonal": parts,
        "pointwise": e.values().iter().map(elem_to_json).collect::<Vec<_>>(),
    }))
}

pub fn bool_hom_to_json(h: &BoolHom) -> Value {
    json!({"dual_map": h.dual_map()})
}

fn hom_to_json(h: &AlgebraHom) -> Result<Value> {
    let images = h
        .generator_images()
        .iter()
        .map(|im| element_to_json(h.target(), im))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({"dual_map": h.datum().dual_map(), "images": images}))
}

fn coverage_to_json(c: Coverage) -> Value {
    match c {
        Coverage::Exhaustive => json!("exhaustive"),
        Coverage::Sampled(n) => json!({"sampled": n}),
    }
}

fn count_to_json(n: Option<u128>) -> Value {
    match n {
        Some(n) => Value::String(n.to_string()),
        None => Value::Null,
    }
}

// ---- decoding ----

fn parse_usize(v: &Value, path: &str) -> Result<usize> {
    let n = match v {
        Value::Number(n) => n.as_u64(),
        Value::String(s) => s.trim().parse::<u64>().ok(),
        _ => None,
    };
    n.and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::parse(path, format!("expected a nonnegative integer, found {v}")))
}

pub fn parse_ring(v: &Value, path: &str) -> Result<Ring> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse(format!("{path}.kind"), "missing ring kind"))?;
    match kind {
        "Z" => Ok(Ring::Integers),
        "Q" => Ok(Ring::Rationals),
        "Zmod" => {
            let mpath = format!("{path}.modulus");
            let m = v
                .get("modulus")
                .ok_or_else(|| Error::parse(&mpath, "missing modulus"))?;
            let m = parse_usize(m, &mpath)?;
            Ring::modular(m as u64).map_err(|e| Error::parse(mpath, e.to_string()))
        }
        "product" => {
            let side = |key: &str| {
                let p = format!("{path}.{key}");
                v.get(key)
                    .ok_or_else(|| Error::parse(&p, "missing factor"))
                    .and_then(|f| parse_ring(f, &p))
            };
            Ok(Ring::product(side("left")?, side("right")?))
        }
        other => Err(Error::parse(
            format!("{path}.kind"),
            format!("unknown ring kind {other:?}"),
        )),
    }
}

fn parse_bigint(text: &str, path: &str) -> Result<BigInt> {
    text.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::parse(path, format!("invalid integer {text:?}")))
}

/// Scalars are normalized on parse: residues are reduced and fractions put
/// in lowest terms.
pub fn parse_elem(ring: &Ring, v: &Value, path: &str) -> Result<Elem> {
    if let Ring::Product(l, r) = ring {
        return match v.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(Elem::Pair(
                Box::new(parse_elem(l, a, &format!("{path}[0]"))?),
                Box::new(parse_elem(r, b, &format!("{path}[1]"))?),
            )),
            _ => Err(Error::parse(path, "expected a [left, right] pair")),
        };
    }
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(Error::parse(path, format!("expected a decimal string, found {v}"))),
    };
    match ring {
        Ring::Integers => Ok(Elem::Int(parse_bigint(&text, path)?)),
        Ring::Modular(m) => {
            let n = parse_bigint(&text, path)?.mod_floor(&BigInt::from(*m));
            Ok(ring.from_bigint(&n))
        }
        Ring::Rationals => {
            let (p, q) = match text.split_once('/') {
                Some((p, q)) => (parse_bigint(p, path)?, parse_bigint(q, path)?),
                None => (parse_bigint(&text, path)?, BigInt::one()),
            };
            if q.is_zero() {
                return Err(Error::parse(path, "zero denominator"));
            }
            Ok(Elem::Rat(BigRational::new(p, q)))
        }
        Ring::Product(..) => unreachable!("handled above"),
    }
}

fn parse_ba(b: FiniteBooleanAlgebra, v: &Value, path: &str) -> Result<BAElement> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::parse(path, "expected an array of atom indices"))?;
    let atoms = items
        .iter()
        .enumerate()
        .map(|(i, a)| parse_usize(a, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    b.element(atoms).map_err(|e| Error::parse(path, e.to_string()))
}

fn parse_combination(s: &SpeckerAlgebra, v: &Value, path: &str) -> Result<FormalCombination> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::parse(path, "expected an array of {coeff, idem} terms"))?;
    let terms = items
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let p = format!("{path}[{i}]");
            let coeff = t
                .get("coeff")
                .ok_or_else(|| Error::parse(format!("{p}.coeff"), "missing field"))?;
            let idem = t
                .get("idem")
                .ok_or_else(|| Error::parse(format!("{p}.idem"), "missing field"))?;
            Ok((
                parse_elem(s.ring(), coeff, &format!("{p}.coeff"))?,
                parse_ba(s.algebra(), idem, &format!("{p}.idem"))?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FormalCombination::new(terms))
}

/// Accepts either representation, or both if they agree.
pub fn parse_element(s: &SpeckerAlgebra, v: &Value, path: &str) -> Result<SpeckerElement> {
    let pointwise = match v.get("pointwise") {
        Some(Value::Array(items)) => {
            let p = format!("{path}.pointwise");
            if items.len() != s.atom_count() {
                return Err(Error::parse(
                    p,
                    format!("expected {} values, found {}", s.atom_count(), items.len()),
                ));
            }
            let values = items
                .iter()
                .enumerate()
                .map(|(i, x)| parse_elem(s.ring(), x, &format!("{p}[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Some(s.element(values)?)
        }
        Some(_) => return Err(Error::parse(format!("{path}.pointwise"), "expected an array")),
        None => None,
    };
    let orthogonal = match v.get("orthogonal") {
        Some(terms) => {
            let p = format!("{path}.orthogonal");
            let c = parse_combination(s, terms, &p)?;
            let disjoint = c.terms.iter().enumerate().all(|(i, (_, e))| {
                c.terms[i + 1..]
                    .iter()
                    .all(|(_, f)| e.is_disjoint(f).unwrap_or(false))
            });
            if !disjoint {
                return Err(Error::parse(p, "idempotents must be pairwise disjoint"));
            }
            Some(s.evaluate(&c)?)
        }
        None => None,
    };
    match (pointwise, orthogonal) {
        (Some(a), Some(b)) if a != b => Err(Error::parse(path, "pointwise and orthogonal forms disagree")),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Err(Error::parse(path, "expected pointwise or orthogonal")),
    }
}

fn parse_element_list(s: &SpeckerAlgebra, v: &Value, path: &str) -> Result<Vec<SpeckerElement>> {
    v.as_array()
        .ok_or_else(|| Error::parse(path, "expected an array of elements"))?
        .iter()
        .enumerate()
        .map(|(i, e)| parse_element(s, e, &format!("{path}[{i}]")))
        .collect()
}
