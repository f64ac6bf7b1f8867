//! Versioned JSON documents for algebras, representations, cochains, 2-term
//! systems, crossed modules and check reports.
//!
//! Emission is canonical: object keys are sorted, bracket entries are sorted
//! by index tuple, zero entries are dropped, and rationals are written as
//! integers when integral and as `"p/q"` strings otherwise. Parsing accepts
//! both integers and strings, validates every index against the declared
//! dimensions and reports problems by JSON path.

use std::path::Path;

use serde_json::{Map, Value};

use crate::algebras::{Algebra, AlgebraKind, CheckReport, Rep, Violation};
use crate::cohomology::LTSCochain;
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat};
use crate::multilinear::{MultiMap, Space};
use crate::twoterm::{CrossedModule, Quadruple, TwoTermSystem, TwoVectorSystem};

pub const VERSION: &str = "1";

/// A cochain together with the bases it is written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainDoc {
    pub space: Space,
    pub module: Space,
    pub cochain: LTSCochain,
}

/// A check report and a short description of what was checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportDoc {
    pub subject: String,
    pub report: CheckReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Algebra(Algebra),
    Representation(Rep),
    Cochain(CochainDoc),
    TwoTermSystem(TwoTermSystem),
    CrossedModule(CrossedModule),
    Report(ReportDoc),
    Quadruple(Quadruple),
    TwoVectorSystem(TwoVectorSystem),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub version: String,
    pub payload: Payload,
}

impl Document {
    pub fn new(payload: Payload) -> Self {
        Document { version: VERSION.to_string(), payload }
    }

    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::Algebra(_) => "algebra",
            Payload::Representation(_) => "representation",
            Payload::Cochain(_) => "cochain",
            Payload::TwoTermSystem(_) => "two_term_system",
            Payload::CrossedModule(_) => "crossed_module",
            Payload::Report(_) => "report",
            Payload::Quadruple(_) => "quadruple",
            Payload::TwoVectorSystem(_) => "two_vector_system",
        }
    }
}

/// Parses a document from JSON text.
pub fn parse(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    document_from_value(&value)
}

/// Canonical text of a document, newline-terminated.
pub fn emit(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&document_to_value(doc)).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn read_document(path: &Path) -> Result<Document> {
    let text =
        std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

pub fn write_document(path: &Path, doc: &Document) -> Result<()> {
    std::fs::write(path, emit(doc)).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

/// Re-emits `text` in canonical form.
pub fn canonicalize(text: &str) -> Result<String> {
    Ok(emit(&parse(text)?))
}

// ---------------------------------------------------------------- reading

struct Obj<'a> {
    map: &'a Map<String, Value>,
    path: String,
}

impl<'a> Obj<'a> {
    fn new(v: &'a Value, path: &str, allowed: &[&str]) -> Result<Self> {
        let map = v.as_object().ok_or_else(|| Error::validation(path, "expected an object"))?;
        for key in map.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::validation(format!("{path}.{key}"), "unknown field"));
            }
        }
        Ok(Obj { map, path: path.to_string() })
    }

    fn at(&self, key: &str) -> String {
        format!("{}.{key}", self.path)
    }

    fn get(&self, key: &str) -> Result<&'a Value> {
        self.map.get(key).ok_or_else(|| Error::validation(self.at(key), "missing field"))
    }

    fn usize(&self, key: &str) -> Result<usize> {
        as_usize(self.get(key)?, &self.at(key))
    }

    fn str(&self, key: &str) -> Result<&'a str> {
        self.get(key)?.as_str().ok_or_else(|| Error::validation(self.at(key), "expected a string"))
    }

    fn array(&self, key: &str) -> Result<&'a Vec<Value>> {
        as_array(self.get(key)?, &self.at(key))
    }
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::validation(path, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::validation(path, "expected an array"))
}

fn parse_rat(v: &Value, path: &str) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_int(i))
            } else if let Some(u) = n.as_u64() {
                u.to_string().parse().map_err(|_| Error::validation(path, "bad integer"))
            } else {
                Err(Error::validation(path, "non-integral numbers must be written as \"p/q\" strings"))
            }
        }
        Value::String(s) => s.parse::<Rat>().map_err(|e| match e {
            Error::Usage(m) => Error::validation(path, m),
            other => other,
        }),
        _ => Err(Error::validation(path, "expected an integer or a \"p/q\" string")),
    }
}

fn parse_space(v: &Value, dim: usize, path: &str) -> Result<Space> {
    let items = as_array(v, path)?;
    if items.len() != dim {
        return Err(Error::validation(path, format!("{} labels for dimension {dim}", items.len())));
    }
    let mut labels = Vec::with_capacity(dim);
    for (k, item) in items.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let l = item.as_str().ok_or_else(|| Error::validation(&p, "expected a string label"))?;
        if labels.iter().any(|x: &String| x == l) {
            return Err(Error::validation(p, format!("duplicate basis label {l:?}")));
        }
        labels.push(l.to_string());
    }
    Space::new(labels)
}

/// `{label: rational}` over `space`.
fn parse_vector(v: &Value, space: &Space, path: &str) -> Result<Vec<Rat>> {
    let map = v.as_object().ok_or_else(|| Error::validation(path, "expected an object of coefficients"))?;
    let mut out = vec![Rat::zero(); space.dim()];
    for (label, c) in map {
        let p = format!("{path}.{label}");
        let k = space.index_of(label).ok_or_else(|| Error::validation(&p, "unknown basis label"))?;
        out[k] = parse_rat(c, &p)?;
    }
    Ok(out)
}

fn parse_args(v: &Value, dims: &[usize], path: &str) -> Result<Vec<usize>> {
    let items = as_array(v, path)?;
    if items.len() != dims.len() {
        return Err(Error::validation(path, format!("{} arguments, expected {}", items.len(), dims.len())));
    }
    let mut out = Vec::with_capacity(dims.len());
    for (k, (item, &d)) in items.iter().zip(dims).enumerate() {
        let p = format!("{path}[{k}]");
        let i = as_usize(item, &p)?;
        if i >= d {
            return Err(Error::validation(p, format!("index {i} out of range for dimension {d}")));
        }
        out.push(i);
    }
    Ok(out)
}

/// `[{args, value}]` into a multilinear map with the given slot dimensions.
fn parse_entries(v: &Value, dims: &[usize], codomain: &Space, path: &str) -> Result<MultiMap> {
    let mut m = MultiMap::zero(dims.to_vec(), codomain.dim());
    let mut seen = std::collections::HashSet::new();
    for (k, e) in as_array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let o = Obj::new(e, &p, &["args", "value"])?;
        let args = parse_args(o.get("args")?, dims, &o.at("args"))?;
        if !seen.insert(args.clone()) {
            return Err(Error::validation(o.at("args"), "duplicate entry"));
        }
        let value = parse_vector(o.get("value")?, codomain, &o.at("value"))?;
        m.set(&args, value);
    }
    Ok(m)
}

fn parse_matrix(v: &Value, rows: usize, cols: usize, path: &str) -> Result<Mat> {
    let items = as_array(v, path)?;
    if items.len() != rows {
        return Err(Error::validation(path, format!("{} rows, expected {rows}", items.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (r, row) in items.iter().enumerate() {
        let p = format!("{path}[{r}]");
        let row = as_array(row, &p)?;
        if row.len() != cols {
            return Err(Error::validation(&p, format!("{} columns, expected {cols}", row.len())));
        }
        for (c, x) in row.iter().enumerate() {
            data.push(parse_rat(x, &format!("{p}[{c}]"))?);
        }
    }
    Mat::from_vec(rows, cols, data)
}

/// `[{args:[i,j], matrix}]` into a map `g ⊗ g → End(V)` stored row-major.
fn parse_matrix_entries(v: &Value, dim: usize, module_dim: usize, path: &str) -> Result<MultiMap> {
    let mut m = MultiMap::uniform(dim, 2, module_dim * module_dim);
    let mut seen = std::collections::HashSet::new();
    for (k, e) in as_array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let o = Obj::new(e, &p, &["args", "matrix"])?;
        let args = parse_args(o.get("args")?, &[dim, dim], &o.at("args"))?;
        if !seen.insert(args.clone()) {
            return Err(Error::validation(o.at("args"), "duplicate entry"));
        }
        let mat = parse_matrix(o.get("matrix")?, module_dim, module_dim, &o.at("matrix"))?;
        m.set(&args, mat.data().to_vec());
    }
    Ok(m)
}

fn parse_algebra(v: &Value, path: &str) -> Result<Algebra> {
    let o = Obj::new(v, path, &["kind", "dimension", "basis", "bracket"])?;
    let kind_name = o.str("kind")?;
    let kind = AlgebraKind::parse(kind_name)
        .ok_or_else(|| Error::validation(o.at("kind"), format!("unknown algebra kind {kind_name:?}")))?;
    let dim = o.usize("dimension")?;
    let space = parse_space(o.get("basis")?, dim, &o.at("basis"))?;
    let b = Obj::new(o.get("bracket")?, &o.at("bracket"), &["arity", "entries"])?;
    let arity = b.usize("arity")?;
    if arity != kind.arity() {
        return Err(Error::validation(b.at("arity"), format!("a {kind_name} bracket has arity {}", kind.arity())));
    }
    let structure = parse_entries(b.get("entries")?, &vec![dim; arity], &space, &b.at("entries"))?;
    Algebra::new(kind, space, structure)
}

fn parse_module(o: &Obj<'_>) -> Result<Space> {
    let m = o.usize("module_dimension")?;
    parse_space(o.get("module_basis")?, m, &o.at("module_basis"))
}

fn parse_rho(o: &Obj<'_>, base_dim: usize, module: &Space) -> Result<MultiMap> {
    let r = Obj::new(o.get("rho")?, &o.at("rho"), &["entries"])?;
    parse_matrix_entries(r.get("entries")?, base_dim, module.dim(), &r.at("entries"))
}

fn parse_representation(v: &Value, path: &str) -> Result<Rep> {
    let o = Obj::new(v, path, &["base", "module_dimension", "module_basis", "rho"])?;
    let base = parse_algebra(o.get("base")?, &o.at("base"))?;
    if !base.kind.is_ternary() {
        return Err(Error::validation(o.at("base.kind"), "representations are over ternary algebras"));
    }
    let module = parse_module(&o)?;
    let rho = parse_rho(&o, base.dim(), &module)?;
    Rep::new(base, module, rho)
}

fn cochain_from(degree: usize, map: MultiMap, path: &str) -> Result<LTSCochain> {
    LTSCochain::new(degree, map).map_err(|e| match e {
        Error::Usage(m) | Error::Precondition(m) => Error::validation(path, m),
        other => other,
    })
}

fn parse_cochain(v: &Value, path: &str) -> Result<CochainDoc> {
    let o = Obj::new(v, path, &["degree", "dimension", "basis", "module_dimension", "module_basis", "entries"])?;
    let degree = o.usize("degree")?;
    if degree == 0 {
        return Err(Error::validation(o.at("degree"), "degree must be at least 1"));
    }
    let dim = o.usize("dimension")?;
    let space = parse_space(o.get("basis")?, dim, &o.at("basis"))?;
    let module = parse_module(&o)?;
    let map = parse_entries(o.get("entries")?, &vec![dim; 2 * degree - 1], &module, &o.at("entries"))?;
    let cochain = cochain_from(degree, map, &o.at("entries"))?;
    Ok(CochainDoc { space, module, cochain })
}

fn parse_bracket_field(o: &Obj<'_>, key: &str, dims: &[usize], codomain: &Space) -> Result<MultiMap> {
    let b = Obj::new(o.get(key)?, &o.at(key), &["entries"])?;
    parse_entries(b.get("entries")?, dims, codomain, &b.at("entries"))
}

fn parse_two_term(v: &Value, path: &str) -> Result<TwoTermSystem> {
    let o = Obj::new(v, path, &["t0_dim", "t1_dim", "t0_basis", "t1_basis", "d", "b000", "b001", "b010", "b100", "j"])?;
    let (n0, n1) = (o.usize("t0_dim")?, o.usize("t1_dim")?);
    let t0 = parse_space(o.get("t0_basis")?, n0, &o.at("t0_basis"))?;
    let t1 = parse_space(o.get("t1_basis")?, n1, &o.at("t1_basis"))?;
    let d = parse_matrix(o.get("d")?, n0, n1, &o.at("d"))?;
    let b000 = parse_bracket_field(&o, "b000", &[n0, n0, n0], &t0)?;
    let b001 = parse_bracket_field(&o, "b001", &[n0, n0, n1], &t1)?;
    let b010 = parse_bracket_field(&o, "b010", &[n0, n1, n0], &t1)?;
    let b100 = parse_bracket_field(&o, "b100", &[n1, n0, n0], &t1)?;
    let j = parse_bracket_field(&o, "j", &[n0; 5], &t1)?;
    TwoTermSystem::new(t0, t1, d, b000, b001, b010, b100, j)
}

fn parse_crossed(v: &Value, path: &str) -> Result<CrossedModule> {
    let o = Obj::new(v, path, &["g", "h", "mu", "theta"])?;
    let g = parse_algebra(o.get("g")?, &o.at("g"))?;
    let h = parse_algebra(o.get("h")?, &o.at("h"))?;
    for (key, a) in [("g", &g), ("h", &h)] {
        if a.kind != AlgebraKind::Lts {
            return Err(Error::validation(o.at(&format!("{key}.kind")), "expected an lts"));
        }
    }
    let mu = parse_matrix(o.get("mu")?, h.dim(), g.dim(), &o.at("mu"))?;
    let t = Obj::new(o.get("theta")?, &o.at("theta"), &["entries"])?;
    let theta = parse_matrix_entries(t.get("entries")?, h.dim(), g.dim(), &t.at("entries"))?;
    CrossedModule::new(g, h, mu, theta)
}

fn parse_quadruple(v: &Value, path: &str) -> Result<Quadruple> {
    let o = Obj::new(v, path, &["lts", "module_dimension", "module_basis", "rho", "omega"])?;
    let lts = parse_algebra(o.get("lts")?, &o.at("lts"))?;
    if lts.kind != AlgebraKind::Lts {
        return Err(Error::validation(o.at("lts.kind"), "expected an lts"));
    }
    let module = parse_module(&o)?;
    let rho = parse_rho(&o, lts.dim(), &module)?;
    let map = parse_bracket_field(&o, "omega", &[lts.dim(); 5], &module)?;
    let omega = cochain_from(3, map, &o.at("omega.entries"))?;
    Ok(Quadruple { rep: Rep::new(lts.clone(), module, rho)?, lts, omega })
}

fn parse_two_vector(v: &Value, path: &str) -> Result<TwoVectorSystem> {
    let o = Obj::new(
        v,
        path,
        &[
            "l0_dim",
            "l1_dim",
            "l0_basis",
            "l1_basis",
            "s",
            "t",
            "i",
            "object_bracket",
            "morphism_bracket",
            "fundamentor",
        ],
    )?;
    let (n0, n1) = (o.usize("l0_dim")?, o.usize("l1_dim")?);
    let l0 = parse_space(o.get("l0_basis")?, n0, &o.at("l0_basis"))?;
    let l1 = parse_space(o.get("l1_basis")?, n1, &o.at("l1_basis"))?;
    Ok(TwoVectorSystem {
        s: parse_matrix(o.get("s")?, n0, n1, &o.at("s"))?,
        t: parse_matrix(o.get("t")?, n0, n1, &o.at("t"))?,
        i: parse_matrix(o.get("i")?, n1, n0, &o.at("i"))?,
        object_bracket: parse_bracket_field(&o, "object_bracket", &[n0; 3], &l0)?,
        morphism_bracket: parse_bracket_field(&o, "morphism_bracket", &[n1; 3], &l1)?,
        fundamentor: parse_bracket_field(&o, "fundamentor", &[n0; 5], &l1)?,
        l0,
        l1,
    })
}

fn parse_rat_list(v: &Value, path: &str) -> Result<Vec<Rat>> {
    as_array(v, path)?.iter().enumerate().map(|(k, x)| parse_rat(x, &format!("{path}[{k}]"))).collect()
}

fn parse_report(v: &Value, path: &str) -> Result<ReportDoc> {
    let o = Obj::new(v, path, &["subject", "passed", "identities", "violations"])?;
    let subject = o.str("subject")?.to_string();
    let mut report = CheckReport::new();
    for (k, item) in o.array("identities")?.iter().enumerate() {
        let p = format!("{}[{k}]", o.at("identities"));
        let io = Obj::new(item, &p, &["name", "passed", "violations"])?;
        report.begin(io.str("name")?);
    }
    for (k, item) in o.array("violations")?.iter().enumerate() {
        let p = format!("{}[{k}]", o.at("violations"));
        let vo = Obj::new(item, &p, &["identity", "witness", "witness_labels", "lhs", "rhs"])?;
        let identity = vo.str("identity")?.to_string();
        if !report.identities.contains(&identity) {
            return Err(Error::validation(vo.at("identity"), "identity not listed in identities"));
        }
        let witness = vo
            .array("witness")?
            .iter()
            .enumerate()
            .map(|(i, x)| as_usize(x, &format!("{}[{i}]", vo.at("witness"))))
            .collect::<Result<Vec<_>>>()?;
        let witness_labels = vo
            .array("witness_labels")?
            .iter()
            .enumerate()
            .map(|(i, x)| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::validation(format!("{}[{i}]", vo.at("witness_labels")), "expected a string"))
            })
            .collect::<Result<Vec<_>>>()?;
        let lhs = parse_rat_list(vo.get("lhs")?, &vo.at("lhs"))?;
        let rhs = parse_rat_list(vo.get("rhs")?, &vo.at("rhs"))?;
        report.violations.push(Violation { identity, witness, witness_labels, lhs, rhs });
    }
    // derived flags must agree with the violations
    let doc = ReportDoc { subject, report };
    let expected = report_to_value(&doc);
    for key in ["passed", "identities"] {
        if o.get(key)? != &expected[key] {
            return Err(Error::validation(o.at(key), "inconsistent with the listed violations"));
        }
    }
    Ok(doc)
}

fn document_from_value(v: &Value) -> Result<Document> {
    let o = Obj::new(v, "$", &["version", "kind", "payload"])?;
    let version = o.str("version")?;
    if version != VERSION {
        return Err(Error::validation(o.at("version"), format!("unsupported version {version:?}")));
    }
    let p = o.get("payload")?;
    let at = o.at("payload");
    let payload = match o.str("kind")? {
        "algebra" => Payload::Algebra(parse_algebra(p, &at)?),
        "representation" => Payload::Representation(parse_representation(p, &at)?),
        "cochain" => Payload::Cochain(parse_cochain(p, &at)?),
        "two_term_system" => Payload::TwoTermSystem(parse_two_term(p, &at)?),
        "crossed_module" => Payload::CrossedModule(parse_crossed(p, &at)?),
        "report" => Payload::Report(parse_report(p, &at)?),
        "quadruple" => Payload::Quadruple(parse_quadruple(p, &at)?),
        "two_vector_system" => Payload::TwoVectorSystem(parse_two_vector(p, &at)?),
        other => return Err(Error::validation(o.at("kind"), format!("unknown document kind {other:?}"))),
    };
    Ok(Document { version: version.to_string(), payload })
}

// ---------------------------------------------------------------- writing

fn rat_value(r: &Rat) -> Value {
    if r.is_integer() {
        if let Ok(i) = i64::try_from(r.numer()) {
            return Value::from(i);
        }
    }
    Value::String(r.to_string())
}

fn obj(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

fn space_value(s: &Space) -> Value {
    Value::from(s.labels().to_vec())
}

fn vector_value(v: &[Rat], space: &Space) -> Value {
    Value::Object(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (space.label(k).to_string(), rat_value(c)))
            .collect(),
    )
}

fn entries_value(m: &MultiMap, codomain: &Space) -> Value {
    Value::Array(
        m.entries()
            .into_iter()
            .map(|(args, v)| obj(vec![("args", Value::from(args)), ("value", vector_value(v, codomain))]))
            .collect(),
    )
}

fn bracket_value(m: &MultiMap, codomain: &Space) -> Value {
    obj(vec![("entries", entries_value(m, codomain))])
}

fn matrix_value(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(rat_value).collect())).collect())
}

fn matrix_entries_value(m: &MultiMap, n: usize) -> Value {
    let entries = m
        .entries()
        .into_iter()
        .map(|(args, v)| {
            let mat = Mat::from_vec(n, n, v.to_vec()).expect("square block");
            obj(vec![("args", Value::from(args)), ("matrix", matrix_value(&mat))])
        })
        .collect();
    obj(vec![("entries", Value::Array(entries))])
}

fn algebra_value(a: &Algebra) -> Value {
    obj(vec![
        ("kind", Value::from(a.kind.name())),
        ("dimension", Value::from(a.dim())),
        ("basis", space_value(&a.space)),
        (
            "bracket",
            obj(vec![("arity", Value::from(a.kind.arity())), ("entries", entries_value(&a.structure, &a.space))]),
        ),
    ])
}

fn representation_value(r: &Rep) -> Value {
    obj(vec![
        ("base", algebra_value(&r.base)),
        ("module_dimension", Value::from(r.module_dim())),
        ("module_basis", space_value(&r.space)),
        ("rho", matrix_entries_value(&r.rho, r.module_dim())),
    ])
}

fn report_to_value(d: &ReportDoc) -> Value {
    let r = &d.report;
    let identities = r
        .identities
        .iter()
        .map(|name| {
            let count = r.violations.iter().filter(|v| &v.identity == name).count();
            obj(vec![
                ("name", Value::from(name.as_str())),
                ("passed", Value::from(count == 0)),
                ("violations", Value::from(count)),
            ])
        })
        .collect();
    let violations = r
        .violations
        .iter()
        .map(|v| {
            obj(vec![
                ("identity", Value::from(v.identity.as_str())),
                ("witness", Value::from(v.witness.clone())),
                ("witness_labels", Value::from(v.witness_labels.clone())),
                ("lhs", Value::Array(v.lhs.iter().map(rat_value).collect())),
                ("rhs", Value::Array(v.rhs.iter().map(rat_value).collect())),
            ])
        })
        .collect();
    obj(vec![
        ("subject", Value::from(d.subject.as_str())),
        ("passed", Value::from(r.passed())),
        ("identities", Value::Array(identities)),
        ("violations", Value::Array(violations)),
    ])
}

fn payload_value(p: &Payload) -> Value {
    match p {
        Payload::Algebra(a) => algebra_value(a),
        Payload::Representation(r) => representation_value(r),
        Payload::Cochain(c) => obj(vec![
            ("degree", Value::from(c.cochain.degree)),
            ("dimension", Value::from(c.space.dim())),
            ("basis", space_value(&c.space)),
            ("module_dimension", Value::from(c.module.dim())),
            ("module_basis", space_value(&c.module)),
            ("entries", entries_value(&c.cochain.map, &c.module)),
        ]),
        Payload::TwoTermSystem(s) => obj(vec![
            ("t0_dim", Value::from(s.n0())),
            ("t1_dim", Value::from(s.n1())),
            ("t0_basis", space_value(&s.t0)),
            ("t1_basis", space_value(&s.t1)),
            ("d", matrix_value(&s.d)),
            ("b000", bracket_value(&s.b000, &s.t0)),
            ("b001", bracket_value(&s.b001, &s.t1)),
            ("b010", bracket_value(&s.b010, &s.t1)),
            ("b100", bracket_value(&s.b100, &s.t1)),
            ("j", bracket_value(&s.j, &s.t1)),
        ]),
        Payload::CrossedModule(c) => obj(vec![
            ("g", algebra_value(&c.g)),
            ("h", algebra_value(&c.h)),
            ("mu", matrix_value(&c.mu)),
            ("theta", matrix_entries_value(&c.theta, c.g.dim())),
        ]),
        Payload::Report(r) => report_to_value(r),
        Payload::Quadruple(q) => obj(vec![
            ("lts", algebra_value(&q.lts)),
            ("module_dimension", Value::from(q.rep.module_dim())),
            ("module_basis", space_value(&q.rep.space)),
            ("rho", matrix_entries_value(&q.rep.rho, q.rep.module_dim())),
            ("omega", bracket_value(&q.omega.map, &q.rep.space)),
        ]),
        Payload::TwoVectorSystem(l) => obj(vec![
            ("l0_dim", Value::from(l.l0.dim())),
            ("l1_dim", Value::from(l.l1.dim())),
            ("l0_basis", space_value(&l.l0)),
            ("l1_basis", space_value(&l.l1)),
            ("s", matrix_value(&l.s)),
            ("t", matrix_value(&l.t)),
            ("i", matrix_value(&l.i)),
            ("object_bracket", bracket_value(&l.object_bracket, &l.l0)),
            ("morphism_bracket", bracket_value(&l.morphism_bracket, &l.l1)),
            ("fundamentor", bracket_value(&l.fundamentor, &l.l1)),
        ]),
    }
}

fn document_to_value(doc: &Document) -> Value {
    obj(vec![
        ("version", Value::from(doc.version.as_str())),
        ("kind", Value::from(doc.kind())),
        ("payload", payload_value(&doc.payload)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::check_lts;
    use crate::corpus::{broken_fundamental, rep_pairs, sl2_lts, two_term_systems, zero_lts};
    use crate::exactlin::rat;
    use crate::twoterm::{categorify, skeletal_to_quadruple, strict_to_crossed};

    fn round_trip(doc: &Document) {
        let text = emit(doc);
        let back = parse(&text).unwrap();
        assert_eq!(&back, doc);
        assert_eq!(emit(&back), text);
    }

    #[test]
    fn minimal_algebra() {
        let text = r#"{"version":"1","kind":"algebra","payload":{"kind":"lts","dimension":1,"basis":["e"],"bracket":{"arity":3,"entries":[]}}}"#;
        let doc = parse(text).unwrap();
        match &doc.payload {
            Payload::Algebra(a) => assert!(a.structure.is_zero() && a.dim() == 1),
            _ => panic!("wrong kind"),
        }
        assert!(emit(&doc).contains("\"entries\": []"));
    }

    #[test]
    fn every_kind_round_trips() {
        round_trip(&Document::new(Payload::Algebra(sl2_lts())));
        round_trip(&Document::new(Payload::Algebra(broken_fundamental())));
        for (_, r) in rep_pairs() {
            round_trip(&Document::new(Payload::Representation(r)));
        }
        for (name, s) in two_term_systems() {
            round_trip(&Document::new(Payload::TwoTermSystem(s.clone())));
            round_trip(&Document::new(Payload::TwoVectorSystem(categorify(&s).unwrap())));
            if s.is_skeletal() && s.n1() > 0 {
                round_trip(&Document::new(Payload::Quadruple(skeletal_to_quadruple(&s).unwrap())));
            }
            if name.ends_with("strict") {
                round_trip(&Document::new(Payload::CrossedModule(strict_to_crossed(&s).unwrap())));
            }
        }
        let report = check_lts(&broken_fundamental()).unwrap();
        round_trip(&Document::new(Payload::Report(ReportDoc { subject: "broken".into(), report })));
        let mut cochain = LTSCochain::zero(2, 1, 1);
        cochain.map.set(&[1], vec![Rat::new(-3, 4)]);
        round_trip(&Document::new(Payload::Cochain(CochainDoc {
            space: Space::standard(2),
            module: Space::from_labels(&["v"]).unwrap(),
            cochain,
        })));
    }

    #[test]
    fn rationals_are_canonical() {
        let text = r#"{"version":"1","kind":"algebra","payload":{"kind":"lts","dimension":1,"basis":["e"],
            "bracket":{"arity":3,"entries":[{"args":[0,0,0],"value":{"e":"4/2"}}]}}}"#;
        let out = canonicalize(text).unwrap();
        assert!(out.contains("\"e\": 2"));
        let text = text.replace("4/2", "-6/4");
        assert!(canonicalize(&text).unwrap().contains("\"e\": \"-3/2\""));
    }

    #[test]
    fn entry_order_does_not_matter() {
        let a = r#"{"version":"1","kind":"algebra","payload":{"kind":"nambu","dimension":2,"basis":["a","b"],
            "bracket":{"arity":3,"entries":[{"args":[1,0,0],"value":{"a":1}},{"args":[0,0,1],"value":{"b":2}}]}}}"#;
        let b = r#"{"payload":{"bracket":{"entries":[{"value":{"b":2},"args":[0,0,1]},{"args":[1,0,0],"value":{"a":1}}],"arity":3},
            "basis":["a","b"],"dimension":2,"kind":"nambu"},"kind":"algebra","version":"1"}"#;
        assert_eq!(canonicalize(a).unwrap(), canonicalize(b).unwrap());
    }

    #[test]
    fn zero_algebra_is_deterministic() {
        let doc = Document::new(Payload::Algebra(zero_lts(2)));
        assert_eq!(emit(&doc), emit(&doc.clone()));
        assert!(emit(&doc).contains("\"entries\": []"));
    }

    fn validation_path(text: &str) -> String {
        match parse(text) {
            Err(Error::Validation { path, .. }) => path,
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn validation_errors_name_the_path() {
        let base = r#"{"version":"1","kind":"algebra","payload":{"kind":"lts","dimension":1,"basis":["e"],
            "bracket":{"arity":3,"entries":[{"args":[0,0,0],"value":{"e":VALUE}}]}}}"#;
        assert_eq!(validation_path(&base.replace("VALUE", "\"1/0\"")), "$.payload.bracket.entries[0].value.e");
        assert_eq!(validation_path(&base.replace("VALUE", "0.5")), "$.payload.bracket.entries[0].value.e");
        assert_eq!(
            validation_path(&base.replace("[0,0,0]", "[0,3,0]").replace("VALUE", "1")),
            "$.payload.bracket.entries[0].args[1]"
        );
        assert_eq!(
            validation_path(&base.replace("[0,0,0]", "[0,0]").replace("VALUE", "1")),
            "$.payload.bracket.entries[0].args"
        );
        assert_eq!(
            validation_path(
                &base
                    .replace("\"dimension\":1,\"basis\":[\"e\"]", "\"dimension\":2,\"basis\":[\"e\",\"e\"]")
                    .replace("VALUE", "1")
            ),
            "$.payload.basis[1]"
        );
        assert_eq!(validation_path(&base.replace("\"1\"", "\"2\"").replace("VALUE", "1")), "$.version");
        assert_eq!(validation_path(&base.replace("\"algebra\"", "\"tensor\"").replace("VALUE", "1")), "$.kind");
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse("{\n  \"version\": \"1\",\n  oops\n}") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn big_and_fractional_values() {
        let big = "123456789012345678901234567890".parse::<Rat>().unwrap();
        let mut a = zero_lts(1);
        a.structure.set(&[0, 0, 0], vec![big]);
        round_trip(&Document::new(Payload::Algebra(a.clone())));
        a.structure.set(&[0, 0, 0], vec![rat(7) / rat(3)]);
        round_trip(&Document::new(Payload::Algebra(a)));
    }
}
