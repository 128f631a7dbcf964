//! JSON documents: parsing with parameter bindings, and canonical output.
//!
//! Every document is an object with `"schema": "algkit/1"` and a `"doc"`
//! tag. Unknown fields are rejected. Coefficients are strings (or JSON
//! integers): a rational literal must be in lowest terms, anything else is
//! an expression over the parameters the document declares.
//!
//! Output is pretty-printed with sorted keys, entries in basis index order
//! and zero entries dropped, so `parse ∘ serialize` is the identity and
//! serializing twice gives identical bytes.

mod expr;
mod render;

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;
use serde_json::{json, Value};

use crate::cocycles::{CocyclePair, Factorization, Representation};
use crate::deformations::{Filtration, TruncatedDeformation};
use crate::error::{Error, Result};
use crate::graded::{GradedKind, GradedPresentation};
use crate::linalg::{Matrix, Space, Vector};
use crate::product::{Product, Symmetry};
use crate::scalar::{format_scalar, looks_like_literal, parse_scalar, Scalar};
use crate::structures::{Kind, Presentation, Slot};

pub use expr::evaluate;
pub use render::{defect_table_value, hierarchy_value, report_value, reports_value, to_text};

pub const SCHEMA: &str = "algkit/1";

/// Parameter values supplied at parse time.
pub type Bindings = BTreeMap<String, Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Algebra(Presentation),
    GradedAlgebra(GradedPresentation),
    /// A square matrix on a named basis.
    Operator { space: Space, matrix: Matrix },
    /// A linear map between two named bases; columns index the source.
    ModuleMap { source: Space, target: Space, matrix: Matrix },
    Representation { algebra: Space, representation: Representation },
    Cocycle { algebra: Space, module: Space, pair: CocyclePair },
    Deformation(TruncatedDeformation),
    Filtration(Filtration),
    Factorization(Box<Factorization>),
}

impl Document {
    pub fn tag(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::GradedAlgebra(_) => "graded-algebra",
            Document::Operator { .. } => "operator",
            Document::ModuleMap { .. } => "module-map",
            Document::Representation { .. } => "representation",
            Document::Cocycle { .. } => "cocycle",
            Document::Deformation(_) => "deformation",
            Document::Filtration(_) => "filtration",
            Document::Factorization(_) => "factorization",
        }
    }
}

#[derive(Deserialize, Clone)]
#[serde(untagged)]
enum RawCoef {
    Int(i64),
    Str(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    #[serde(default)]
    symmetry: Option<String>,
    entries: Vec<(String, String, String, RawCoef)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntries {
    entries: Vec<(String, String, String, RawCoef)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    kind: String,
    #[serde(default)]
    parameters: Vec<String>,
    basis: Vec<String>,
    products: BTreeMap<String, RawProduct>,
    #[serde(default)]
    notes: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraded {
    kind: String,
    #[serde(default)]
    parameters: Vec<String>,
    basis: Vec<String>,
    degrees: Vec<i64>,
    bracket_shift: i64,
    products: BTreeMap<String, RawEntries>,
    #[serde(default)]
    notes: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    #[serde(default)]
    parameters: Vec<String>,
    basis: Vec<String>,
    entries: Vec<(String, String, RawCoef)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModuleMap {
    #[serde(default)]
    parameters: Vec<String>,
    source: Vec<String>,
    target: Vec<String>,
    entries: Vec<(String, String, RawCoef)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    #[serde(default)]
    parameters: Vec<String>,
    algebra: Vec<String>,
    module: Vec<String>,
    mu: RawEntries,
    rho: RawEntries,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCocycle {
    #[serde(default)]
    parameters: Vec<String>,
    algebra: Vec<String>,
    module: Vec<String>,
    h: RawProduct,
    #[serde(rename = "H")]
    big_h: RawProduct,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeformation {
    kind: String,
    #[serde(default)]
    parameters: Vec<String>,
    basis: Vec<String>,
    order: usize,
    products: BTreeMap<String, Vec<RawProduct>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFiltration {
    #[serde(default)]
    parameters: Vec<String>,
    basis: Vec<String>,
    levels: Vec<Vec<Vec<(String, RawCoef)>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactorization {
    algebra: Value,
    representation: Value,
    cocycle: Value,
    operator: Value,
}

#[derive(Deserialize)]
#[serde(tag = "doc", rename_all = "kebab-case")]
enum RawDoc {
    Algebra(RawAlgebra),
    GradedAlgebra(RawGraded),
    Operator(RawOperator),
    ModuleMap(RawModuleMap),
    Representation(RawRepresentation),
    Cocycle(RawCocycle),
    Deformation(RawDeformation),
    Filtration(RawFiltration),
    Factorization(RawFactorization),
}

/// Coefficient evaluation for one document.
struct Coefs<'a> {
    declared: BTreeSet<String>,
    bindings: &'a Bindings,
}

impl<'a> Coefs<'a> {
    fn new(parameters: &[String], bindings: &'a Bindings) -> Result<Self> {
        let mut declared = BTreeSet::new();
        for p in parameters {
            if !is_identifier(p) {
                return Err(Error::doc(format!("`{p}` is not a parameter name")));
            }
            if !declared.insert(p.clone()) {
                return Err(Error::doc(format!("parameter `{p}` declared twice")));
            }
            if !bindings.contains_key(p) {
                return Err(Error::UnboundParameter(p.clone()));
            }
        }
        Ok(Coefs { declared, bindings })
    }

    fn eval(&self, c: &RawCoef) -> Result<Scalar> {
        match c {
            RawCoef::Int(n) => Ok(Scalar::from_integer((*n).into())),
            RawCoef::Str(s) if looks_like_literal(s) => parse_scalar(s),
            RawCoef::Str(s) => {
                if self.declared.is_empty() {
                    return Err(Error::Expression {
                        expr: s.clone(),
                        reason: "expressions need declared parameters".into(),
                    });
                }
                let env: Bindings = self
                    .declared
                    .iter()
                    .map(|p| (p.clone(), self.bindings[p].clone()))
                    .collect();
                evaluate(s, &env)
            }
        }
    }
}

fn space(names: &[String]) -> Result<Space> {
    Space::new(names.iter().cloned())
}

fn check_symmetry(slot: &str, declared: &Option<String>, p: &Product) -> Result<()> {
    let Some(flag) = declared else {
        return Ok(());
    };
    let ok = match Symmetry::from_tag(flag)? {
        Symmetry::None => true,
        Symmetry::Symmetric => p.is_symmetric(),
        Symmetry::Skew => p.is_skew(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::SymmetryFlag {
            slot: slot.to_string(),
            declared: flag.clone(),
        })
    }
}

fn trilinear(
    what: &str,
    entries: &[(String, String, String, RawCoef)],
    (l, r, o): (&Space, &Space, &Space),
    coefs: &Coefs,
) -> Result<Product> {
    let mut seen = BTreeSet::new();
    let mut list = Vec::new();
    for (x, y, z, c) in entries {
        let key = (l.index_of(x)?, r.index_of(y)?, o.index_of(z)?);
        if !seen.insert(key) {
            return Err(Error::doc(format!("{what}: entry ({x}, {y}, {z}) listed twice")));
        }
        list.push((key.0, key.1, key.2, coefs.eval(c)?));
    }
    Product::from_entries(l.dim(), r.dim(), o.dim(), list)
}

fn flagged(what: &str, raw: &RawProduct, dims: (&Space, &Space, &Space), coefs: &Coefs) -> Result<Product> {
    let p = trilinear(what, &raw.entries, dims, coefs)?;
    check_symmetry(what, &raw.symmetry, &p)?;
    Ok(p)
}

fn linear(entries: &[(String, String, RawCoef)], source: &Space, target: &Space, coefs: &Coefs) -> Result<Matrix> {
    let mut m = Matrix::zero(target.dim(), source.dim());
    let mut seen = BTreeSet::new();
    for (s, t, c) in entries {
        let (j, i) = (source.index_of(s)?, target.index_of(t)?);
        if !seen.insert((j, i)) {
            return Err(Error::doc(format!("operator entry ({s}, {t}) listed twice")));
        }
        m.set(i, j, coefs.eval(c)?);
    }
    Ok(m)
}

/// Parses one document. `bindings` must bind every declared parameter;
/// extra bindings are ignored.
pub fn parse_document(text: &str, bindings: &Bindings) -> Result<Document> {
    let value: Value = serde_json::from_str(text)?;
    parse_value(value, bindings)
}

pub fn parse_value(mut value: Value, bindings: &Bindings) -> Result<Document> {
    let obj = value.as_object_mut().ok_or_else(|| Error::doc("a document must be a JSON object"))?;
    match obj.remove("schema") {
        Some(Value::String(s)) if s == SCHEMA => {}
        Some(other) => return Err(Error::doc(format!("unsupported schema {other}"))),
        None => return Err(Error::doc("missing `schema`")),
    }
    let raw: RawDoc = serde_json::from_value(value)?;
    match raw {
        RawDoc::Algebra(r) => {
            let coefs = Coefs::new(&r.parameters, bindings)?;
            let sp = space(&r.basis)?;
            let mut products = Vec::new();
            for (tag, p) in &r.products {
                products.push((Slot::from_tag(tag)?, flagged(tag, p, (&sp, &sp, &sp), &coefs)?));
            }
            let mut a = Presentation::new(Kind::from_tag(&r.kind)?, sp, products)?;
            a.metadata = r.notes;
            Ok(Document::Algebra(a))
        }
        RawDoc::GradedAlgebra(r) => {
            let coefs = Coefs::new(&r.parameters, bindings)?;
            let sp = space(&r.basis)?;
            let mut products = Vec::new();
            for (tag, p) in &r.products {
                products.push((Slot::from_tag(tag)?, trilinear(tag, &p.entries, (&sp, &sp, &sp), &coefs)?));
            }
            let mut g = GradedPresentation::new(GradedKind::from_tag(&r.kind)?, sp, r.degrees, r.bracket_shift, products)?;
            g.metadata = r.notes;
            Ok(Document::GradedAlgebra(g))
        }
        RawDoc::Operator(r) => {
            let coefs = Coefs::new(&r.parameters, bindings)?;
            let sp = space(&r.basis)?;
            let matrix = linear(&r.entries, &sp, &sp, &coefs)?;
            Ok(Document::Operator { space: sp, matrix })
        }
        RawDoc::ModuleMap(r) => {
            let coefs = Coefs::new(&r.parameters, bindings)?;
            let (source, target) = (space(&r.source)?, space(&r.target)?);
            let matrix = linear(&r.entries, &source, &target, &coefs)?;
            Ok(Document::ModuleMap { source, target, matrix })
        }
        RawDoc::Representation(r) => {
            let coefs = Coefs::new(&r.parameters, bindings)?;
            let (a, v) = (space(&r.algebra)?, space(&r.module)?);
            let mu = trilinear("mu", &r.mu.entries, (&a, &v, &v), &coefs)?;
            let rho = trilinear("rho", &r.rho.entries, (&a, &v, &v), &coefs)?;
            let representation = Representation::new(a.dim(), v, mu, rho)?;
            Ok(Document::Representation { algebra: a, representation })
        }
        RawDoc::Cocycle(r) => {
            let coefs = Coefs::new(&r.parameters, bindings)?;
            let (a, v) = (space(&r.algebra)?, space(&r.module)?);
            let h = flagged("h", &r.h, (&a, &a, &v), &coefs)?;
            let big_h = flagged("H", &r.big_h, (&a, &a, &v), &coefs)?;
            let pair = CocyclePair::new(a.dim(), v.dim(), h, big_h)?;
            Ok(Document::Cocycle { algebra: a, module: v, pair })
        }
        RawDoc::Deformation(r) => {
            let coefs = Coefs::new(&r.parameters, bindings)?;
            let sp = space(&r.basis)?;
            let mut coefficients = BTreeMap::new();
            for (tag, ps) in &r.products {
                let slot = Slot::from_tag(tag)?;
                let list = ps
                    .iter()
                    .enumerate()
                    .map(|(i, p)| flagged(&format!("{tag}[{i}]"), p, (&sp, &sp, &sp), &coefs))
                    .collect::<Result<Vec<_>>>()?;
                coefficients.insert(slot, list);
            }
            Ok(Document::Deformation(TruncatedDeformation::new(
                Kind::from_tag(&r.kind)?,
                sp,
                r.order,
                coefficients,
            )?))
        }
        RawDoc::Filtration(r) => {
            let coefs = Coefs::new(&r.parameters, bindings)?;
            let sp = space(&r.basis)?;
            let mut levels = Vec::new();
            for level in &r.levels {
                let mut vs = Vec::new();
                for combo in level {
                    let mut v = Vector::zeros(sp.dim());
                    for (name, c) in combo {
                        let i = sp.index_of(name)?;
                        let cur = v.get(i).clone();
                        v.set(i, cur + coefs.eval(c)?);
                    }
                    vs.push(v);
                }
                levels.push(vs);
            }
            Ok(Document::Filtration(Filtration::new(sp, &levels)?))
        }
        RawDoc::Factorization(r) => {
            let algebra = match parse_value(r.algebra, bindings)? {
                Document::Algebra(a) => a,
                d => return Err(Error::doc(format!("factorization algebra is a {} document", d.tag()))),
            };
            let representation = match parse_value(r.representation, bindings)? {
                Document::Representation { representation, .. } => representation,
                d => return Err(Error::doc(format!("factorization representation is a {} document", d.tag()))),
            };
            let cocycle = match parse_value(r.cocycle, bindings)? {
                Document::Cocycle { pair, .. } => pair,
                d => return Err(Error::doc(format!("factorization cocycle is a {} document", d.tag()))),
            };
            let operator = match parse_value(r.operator, bindings)? {
                Document::ModuleMap { matrix, .. } => matrix,
                d => return Err(Error::doc(format!("factorization operator is a {} document", d.tag()))),
            };
            Ok(Document::Factorization(Box::new(Factorization {
                algebra,
                representation,
                cocycle,
                operator,
            })))
        }
    }
}

fn natural_symmetry(slot: Slot) -> Symmetry {
    match slot {
        Slot::Dot | Slot::Vee | Slot::Circ => Symmetry::Symmetric,
        Slot::Bracket | Slot::BlackDiamond => Symmetry::Skew,
        _ => Symmetry::None,
    }
}

/// The flag written for a product: what the entries show, or the slot's
/// usual symmetry for the zero product.
fn written_symmetry(p: &Product, zero_default: Symmetry) -> Symmetry {
    if p.is_zero() {
        zero_default
    } else {
        p.symmetry()
    }
}

fn entries_value(p: &Product, (l, r, o): (&Space, &Space, &Space)) -> Value {
    Value::Array(
        p.nonzero_entries()
            .map(|(i, j, k, c)| json!([l.name(i), r.name(j), o.name(k), format_scalar(c)]))
            .collect(),
    )
}

fn flagged_value(p: &Product, sym: Symmetry, dims: (&Space, &Space, &Space)) -> Value {
    json!({ "symmetry": sym.tag(), "entries": entries_value(p, dims) })
}

fn matrix_entries(m: &Matrix, source: &Space, target: &Space) -> Value {
    let mut list: Vec<(usize, usize, &Scalar)> = m.entries().filter(|(_, _, c)| !num_traits::Zero::is_zero(*c)).collect();
    list.sort_by_key(|&(i, j, _)| (j, i));
    Value::Array(
        list.into_iter()
            .map(|(i, j, c)| json!([source.name(j), target.name(i), format_scalar(c)]))
            .collect(),
    )
}

pub fn vector_value(space: &Space, v: &Vector) -> Value {
    Value::Array(v.iter_nonzero().map(|(i, c)| json!([space.name(i), format_scalar(c)])).collect())
}

fn with_header(tag: &str, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("object body");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("doc".into(), json!(tag));
    body
}

pub fn algebra_value(a: &Presentation) -> Value {
    let sp = a.space();
    let products: serde_json::Map<String, Value> = a
        .products()
        .map(|(s, p)| (s.tag().to_string(), flagged_value(p, written_symmetry(p, natural_symmetry(s)), (sp, sp, sp))))
        .collect();
    let mut body = json!({ "kind": a.kind().tag(), "basis": sp.names(), "products": products });
    if !a.metadata.is_empty() {
        body["notes"] = json!(a.metadata);
    }
    with_header("algebra", body)
}

pub fn graded_value(g: &GradedPresentation) -> Value {
    let sp = g.space();
    let products: serde_json::Map<String, Value> = g
        .products()
        .map(|(s, p)| (s.tag().to_string(), json!({ "entries": entries_value(p, (sp, sp, sp)) })))
        .collect();
    let mut body = json!({
        "kind": g.kind().tag(),
        "basis": sp.names(),
        "degrees": g.degrees(),
        "bracket_shift": g.bracket_shift(),
        "products": products,
    });
    if !g.metadata.is_empty() {
        body["notes"] = json!(g.metadata);
    }
    with_header("graded-algebra", body)
}

pub fn operator_value(space: &Space, m: &Matrix) -> Value {
    with_header("operator", json!({ "basis": space.names(), "entries": matrix_entries(m, space, space) }))
}

pub fn module_map_value(source: &Space, target: &Space, m: &Matrix) -> Value {
    with_header(
        "module-map",
        json!({ "source": source.names(), "target": target.names(), "entries": matrix_entries(m, source, target) }),
    )
}

pub fn representation_value(algebra: &Space, rep: &Representation) -> Value {
    let v = rep.module();
    with_header(
        "representation",
        json!({
            "algebra": algebra.names(),
            "module": v.names(),
            "mu": { "entries": entries_value(rep.mu(), (algebra, v, v)) },
            "rho": { "entries": entries_value(rep.rho(), (algebra, v, v)) },
        }),
    )
}

pub fn cocycle_value(algebra: &Space, module: &Space, pair: &CocyclePair) -> Value {
    let dims = (algebra, algebra, module);
    with_header(
        "cocycle",
        json!({
            "algebra": algebra.names(),
            "module": module.names(),
            "h": flagged_value(&pair.h, written_symmetry(&pair.h, Symmetry::Symmetric), dims),
            "H": flagged_value(&pair.big_h, written_symmetry(&pair.big_h, Symmetry::Skew), dims),
        }),
    )
}

pub fn deformation_value(d: &TruncatedDeformation) -> Value {
    let sp = d.space();
    let products: serde_json::Map<String, Value> = d
        .coefficients()
        .iter()
        .map(|(s, cs)| {
            let list = cs
                .iter()
                .map(|p| flagged_value(p, written_symmetry(p, natural_symmetry(*s)), (sp, sp, sp)))
                .collect();
            (s.tag().to_string(), Value::Array(list))
        })
        .collect();
    with_header(
        "deformation",
        json!({ "kind": d.kind().tag(), "basis": sp.names(), "order": d.order(), "products": products }),
    )
}

pub fn filtration_value(f: &Filtration) -> Value {
    let sp = f.space();
    let levels: Vec<Value> = f
        .levels()
        .iter()
        .map(|l| Value::Array(l.basis().iter().map(|v| vector_value(sp, v)).collect()))
        .collect();
    with_header("filtration", json!({ "basis": sp.names(), "levels": levels }))
}

pub fn factorization_value(f: &Factorization) -> Value {
    let a = f.algebra.space();
    let v = f.representation.module();
    with_header(
        "factorization",
        json!({
            "algebra": algebra_value(&f.algebra),
            "representation": representation_value(a, &f.representation),
            "cocycle": cocycle_value(a, v, &f.cocycle),
            "operator": module_map_value(v, a, &f.operator),
        }),
    )
}

pub fn document_value(d: &Document) -> Value {
    match d {
        Document::Algebra(a) => algebra_value(a),
        Document::GradedAlgebra(g) => graded_value(g),
        Document::Operator { space, matrix } => operator_value(space, matrix),
        Document::ModuleMap { source, target, matrix } => module_map_value(source, target, matrix),
        Document::Representation { algebra, representation } => representation_value(algebra, representation),
        Document::Cocycle { algebra, module, pair } => cocycle_value(algebra, module, pair),
        Document::Deformation(d) => deformation_value(d),
        Document::Filtration(f) => filtration_value(f),
        Document::Factorization(f) => factorization_value(f),
    }
}

/// Canonical text: two-space indentation, sorted keys, trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn serialize_document(d: &Document) -> String {
    to_canonical_string(&document_value(d))
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses `name=value` with a canonical scalar value.
pub fn parse_binding(s: &str) -> Result<(String, Scalar)> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| Error::doc(format!("binding `{s}` is not name=value")))?;
    let name = name.trim();
    if !is_identifier(name) {
        return Err(Error::doc(format!("binding `{s}` has no parameter name")));
    }
    Ok((name.to_string(), parse_scalar(value.trim())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    const POISSON: &str = r#"{
      "schema": "algkit/1",
      "doc": "algebra",
      "kind": "poisson",
      "parameters": ["a"],
      "basis": ["x", "y"],
      "products": {
        "dot": {"symmetry": "symmetric", "entries": [["x", "x", "x", "1"]]},
        "bracket": {"symmetry": "skew", "entries": [["x", "y", "y", "a"], ["y", "x", "y", "-a"]]}
      }
    }"#;

    fn bind(a: i64) -> Bindings {
        Bindings::from([("a".to_string(), int(a))])
    }

    #[test]
    fn parameters_are_substituted() {
        let Document::Algebra(p) = parse_document(POISSON, &bind(3)).unwrap() else {
            panic!("wrong document")
        };
        assert_eq!(p.product(Slot::Bracket).get(0, 1, 1), &int(3));
        assert_eq!(p.product(Slot::Bracket).get(1, 0, 1), &int(-3));
    }

    #[test]
    fn unbound_parameter_is_rejected() {
        let e = parse_document(POISSON, &Bindings::new()).unwrap_err();
        assert!(matches!(e, Error::UnboundParameter(ref p) if p == "a"));
    }

    #[test]
    fn round_trip_is_stable() {
        let d = parse_document(POISSON, &bind(2)).unwrap();
        let s = serialize_document(&d);
        assert!(!s.contains("parameters"));
        let back = parse_document(&s, &Bindings::new()).unwrap();
        assert_eq!(back, d);
        assert_eq!(serialize_document(&back), s);
    }

    #[test]
    fn wrong_symmetry_flag_is_structural() {
        let bad = POISSON.replace(r#""symmetry": "skew""#, r#""symmetry": "symmetric""#);
        assert!(matches!(parse_document(&bad, &bind(1)), Err(Error::SymmetryFlag { .. })));
        // with a = 0 the bracket is zero, hence symmetric too
        assert!(parse_document(&bad, &bind(0)).is_ok());
    }

    #[test]
    fn unknown_fields_and_names_are_rejected() {
        let extra = POISSON.replace(r#""kind": "poisson","#, r#""kind": "poisson", "colour": "red","#);
        assert!(parse_document(&extra, &bind(1)).is_err());
        let name = POISSON.replace(r#"["x", "x", "x", "1"]"#, r#"["x", "z", "x", "1"]"#);
        assert!(matches!(parse_document(&name, &bind(1)), Err(Error::UnknownBasisName(_))));
        let schema = POISSON.replace("algkit/1", "algkit/2");
        assert!(parse_document(&schema, &bind(1)).is_err());
    }

    #[test]
    fn coefficients_must_be_canonical() {
        let bad = POISSON.replace(r#"["x", "x", "x", "1"]"#, r#"["x", "x", "x", "2/4"]"#);
        assert!(matches!(parse_document(&bad, &bind(1)), Err(Error::NonCanonicalScalar(_))));
        let int = POISSON.replace(r#"["x", "x", "x", "1"]"#, r#"["x", "x", "x", 1]"#);
        assert!(parse_document(&int, &bind(1)).is_ok());
    }

    #[test]
    fn expressions_need_parameters() {
        let src = POISSON.replace(r#""parameters": ["a"],"#, "").replace("\"a\"]", "\"2\"]").replace("\"-a\"", "\"1+1\"");
        assert!(matches!(parse_document(&src, &Bindings::new()), Err(Error::Expression { .. })));
    }

    #[test]
    fn division_by_zero_in_a_coefficient() {
        let src = POISSON.replace("\"-a\"", "\"1/(a-a)\"");
        assert!(matches!(parse_document(&src, &bind(1)), Err(Error::Expression { .. })));
    }

    #[test]
    fn bindings_parse() {
        assert_eq!(parse_binding("a=-3/2").unwrap(), ("a".to_string(), crate::scalar::ratio(-3, 2)));
        assert!(parse_binding("a=6/4").is_err());
        assert!(parse_binding("=1").is_err());
    }
}
