//! The JSON file format: a field, a group and a list of named objects, each validated on load.

use serde::{Deserialize, Serialize};

use crate::action::{restrict_global, GlobalAction, PartialAction, Restriction};
use crate::algebra::{Algebra, GradedAlgebra};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{Field, LinearMap, Scalar, Subspace, Vector};
use crate::morita::{AbstractContext, ContextTables};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub labels: Vec<String>,
}

/// Basis metadata of constructed algebras: `b_entry e_{row, col}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub entry: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub field: String,
    /// Absent for ungraded algebras carrying an action; read as all degrees `1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<Vec<usize>>,
    pub sc: Vec<(usize, usize, Vec<String>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreesDoc {
    pub degree: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingsDoc {
    pub ax: Vec<(usize, usize, Vec<String>)>,
    pub xb: Vec<(usize, usize, Vec<String>)>,
    pub by: Vec<(usize, usize, Vec<String>)>,
    pub ya: Vec<(usize, usize, Vec<String>)>,
    pub xy: Vec<(usize, usize, Vec<String>)>,
    pub yx: Vec<(usize, usize, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObjectDoc {
    Algebra(AlgebraDoc),
    /// `domains[t]` is a basis of `D_t`; row `j` of `maps[t]` is `α_t` of row `j` of `domains[t⁻¹]`.
    PartialAction { algebra: AlgebraDoc, domains: Vec<Vec<Vec<String>>>, maps: Vec<Vec<Vec<String>>> },
    /// Row `i` of `maps[t]` is `β_t(b_i)`. With `ideal` this is the restriction to that ideal.
    GlobalAction {
        algebra: AlgebraDoc,
        maps: Vec<Vec<Vec<String>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideal: Option<Vec<Vec<String>>>,
    },
    /// Pairing tables list `(i, j, coordinates)` with coordinates in the basis of the target block.
    Context {
        #[serde(rename = "A")]
        a: AlgebraDoc,
        #[serde(rename = "B")]
        b: AlgebraDoc,
        #[serde(rename = "X")]
        x: DegreesDoc,
        #[serde(rename = "Y")]
        y: DegreesDoc,
        pairings: PairingsDoc,
    },
    /// A linear map between two algebra objects of the same document; row `i` is the image of `b_i`.
    Map { source: String, target: String, columns: Vec<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedObjectDoc {
    pub name: String,
    #[serde(flatten)]
    pub object: ObjectDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentDoc {
    pub format_version: String,
    pub field: String,
    pub group: GroupDoc,
    pub objects: Vec<NamedObjectDoc>,
}

/// A validated object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra { algebra: GradedAlgebra, labels: Option<Vec<Label>> },
    PartialAction(PartialAction),
    GlobalAction(GlobalAction),
    Restriction(Restriction),
    Context(AbstractContext),
    Map { source: String, target: String, map: LinearMap },
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra { .. } => "algebra",
            Object::PartialAction(_) => "partial_action",
            Object::GlobalAction(_) => "global_action",
            Object::Restriction(_) => "restriction",
            Object::Context(_) => "context",
            Object::Map { .. } => "map",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: Field,
    pub group: FiniteGroup,
    pub objects: Vec<(String, Object)>,
}

impl Document {
    pub fn new(field: Field, group: FiniteGroup) -> Document {
        Document { field, group, objects: Vec::new() }
    }

    pub fn with(mut self, name: impl Into<String>, object: Object) -> Document {
        self.objects.push((name.into(), object));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    /// The object called `name`, or the unique object accepted by `pick` when no name is given.
    pub fn select<'a, T>(&'a self, name: Option<&str>, what: &str, pick: impl Fn(&'a Object) -> Option<T>) -> Result<(&'a str, T)> {
        if let Some(n) = name {
            let o = self.get(n).ok_or_else(|| Error::Usage(format!("no object named `{n}`")))?;
            let v = pick(o).ok_or_else(|| Error::Usage(format!("object `{n}` is a {}, expected {what}", o.kind())))?;
            return Ok((self.name_of(o), v));
        }
        let mut found = self.objects.iter().filter_map(|(n, o)| pick(o).map(|v| (n.as_str(), v)));
        match (found.next(), found.next()) {
            (Some(v), None) => Ok(v),
            (None, _) => Err(Error::Usage(format!("document has no {what}"))),
            (Some(_), Some(_)) => Err(Error::Usage(format!("document has several {what} objects; name one with --object"))),
        }
    }

    fn name_of(&self, o: &Object) -> &str {
        self.objects.iter().find(|(_, p)| std::ptr::eq(p, o)).map(|(n, _)| n.as_str()).unwrap_or("")
    }

    pub fn to_doc(&self) -> DocumentDoc {
        let g = &self.group;
        DocumentDoc {
            format_version: FORMAT_VERSION.into(),
            field: self.field.to_string(),
            group: GroupDoc { order: g.order(), table: g.table().to_vec(), identity: g.identity(), labels: g.labels().to_vec() },
            objects: self.objects.iter().map(|(n, o)| NamedObjectDoc { name: n.clone(), object: object_doc(o) }).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_doc()).expect("serializable");
        s.push('\n');
        s
    }
}

fn vector_doc(v: &Vector) -> Vec<String> {
    v.dense().iter().map(Scalar::to_text).collect()
}

fn triples_doc<'a>(t: impl IntoIterator<Item = (usize, usize, &'a Vector)>) -> Vec<(usize, usize, Vec<String>)> {
    t.into_iter().map(|(i, j, v)| (i, j, vector_doc(v))).collect()
}

fn algebra_doc(a: &Algebra, degree: Option<&[usize]>, labels: Option<&[Label]>) -> AlgebraDoc {
    AlgebraDoc {
        dim: a.dim(),
        field: a.field().to_string(),
        degree: degree.map(<[usize]>::to_vec),
        sc: triples_doc(a.products()),
        labels: labels.map(<[Label]>::to_vec),
    }
}

fn graded_doc(b: &GradedAlgebra) -> AlgebraDoc {
    algebra_doc(b.algebra(), Some(b.degrees()), None)
}

fn maps_doc(beta: &GlobalAction) -> Vec<Vec<Vec<String>>> {
    beta.maps().iter().map(|m| m.columns().iter().map(vector_doc).collect()).collect()
}

fn object_doc(o: &Object) -> ObjectDoc {
    match o {
        Object::Algebra { algebra, labels } => {
            ObjectDoc::Algebra(algebra_doc(algebra.algebra(), Some(algebra.degrees()), labels.as_deref()))
        }
        Object::PartialAction(pa) => {
            let g = pa.group();
            let domains = g.elements().map(|t| pa.domain(t).rows().iter().map(vector_doc).collect()).collect();
            let maps = g
                .elements()
                .map(|t| pa.domain(g.inv(t)).rows().iter().map(|x| vector_doc(&pa.apply(t, x).expect("in domain"))).collect())
                .collect();
            ObjectDoc::PartialAction { algebra: algebra_doc(pa.algebra(), None, None), domains, maps }
        }
        Object::GlobalAction(beta) => {
            ObjectDoc::GlobalAction { algebra: algebra_doc(beta.algebra(), None, None), maps: maps_doc(beta), ideal: None }
        }
        Object::Restriction(r) => ObjectDoc::GlobalAction {
            algebra: algebra_doc(r.beta.algebra(), None, None),
            maps: maps_doc(&r.beta),
            ideal: Some(r.ideal.rows().iter().map(vector_doc).collect()),
        },
        Object::Context(c) => {
            let t = c.tables();
            ObjectDoc::Context {
                a: graded_doc(&c.algebra_a()),
                b: graded_doc(&c.algebra_b()),
                x: DegreesDoc { degree: c.x_degrees() },
                y: DegreesDoc { degree: c.y_degrees() },
                pairings: PairingsDoc {
                    ax: triples_doc(t.ax.iter().map(|(i, j, v)| (*i, *j, v))),
                    xb: triples_doc(t.xb.iter().map(|(i, j, v)| (*i, *j, v))),
                    by: triples_doc(t.by.iter().map(|(i, j, v)| (*i, *j, v))),
                    ya: triples_doc(t.ya.iter().map(|(i, j, v)| (*i, *j, v))),
                    xy: triples_doc(t.xy.iter().map(|(i, j, v)| (*i, *j, v))),
                    yx: triples_doc(t.yx.iter().map(|(i, j, v)| (*i, *j, v))),
                },
            }
        }
        Object::Map { source, target, map } => ObjectDoc::Map {
            source: source.clone(),
            target: target.clone(),
            columns: map.columns().iter().map(vector_doc).collect(),
        },
    }
}

/// Scalars over `F_p` may also be written `"n/d"`.
fn parse_scalar(field: Field, s: &str) -> Result<Scalar> {
    if let (Field::Prime(_), Some((n, d))) = (field, s.split_once('/')) {
        let d = field.parse(d)?;
        if d.is_zero() {
            return Err(Error::ValidationError { object: "scalar".into(), detail: format!("`{s}` has denominator 0 in {field}") });
        }
        return Ok(field.parse(n)?.div(&d));
    }
    field.parse(s)
}

struct Loader {
    field: Field,
    group: FiniteGroup,
    object: String,
}

impl Loader {
    fn invalid(&self, detail: impl std::fmt::Display) -> Error {
        Error::ValidationError { object: self.object.clone(), detail: detail.to_string() }
    }

    fn wrap<T>(&self, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::ValidationError { detail, .. } => self.invalid(detail),
            other => self.invalid(other),
        })
    }

    fn vector(&self, dim: usize, coords: &[String]) -> Result<Vector> {
        if coords.len() != dim {
            return Err(self.invalid(format!("vector of length {} where {dim} was expected", coords.len())));
        }
        let c = coords.iter().map(|s| parse_scalar(self.field, s)).collect::<Result<Vec<_>>>();
        self.wrap(Vector::from_dense(self.wrap(c)?, self.field))
    }

    fn triples(&self, dim: usize, t: &[(usize, usize, Vec<String>)]) -> Result<Vec<(usize, usize, Vector)>> {
        t.iter().map(|(i, j, v)| Ok((*i, *j, self.vector(dim, v)?))).collect()
    }

    fn algebra(&self, d: &AlgebraDoc) -> Result<Algebra> {
        let a = self.wrap(Algebra::from_products(d.dim, self.field, self.triples(d.dim, &d.sc)?))?;
        if let Some((i, j, k)) = a.associativity_failure() {
            return Err(self.invalid(format!("structure constants are not associative on basis triple ({i}, {j}, {k})")));
        }
        Ok(a)
    }

    fn graded(&self, d: &AlgebraDoc) -> Result<GradedAlgebra> {
        let a = self.algebra(d)?;
        let degree = d.degree.clone().ok_or_else(|| self.invalid("graded algebra needs a `degree` list"))?;
        if degree.len() != d.dim {
            return Err(self.invalid(format!("degree list has length {} but dim is {}", degree.len(), d.dim)));
        }
        if let Some(l) = &d.labels {
            if l.len() != d.dim {
                return Err(self.invalid(format!("label list has length {} but dim is {}", l.len(), d.dim)));
            }
        }
        self.wrap(GradedAlgebra::new(a, self.group.clone(), degree))
    }

    fn per_element<'a, T>(&self, what: &str, v: &'a [T]) -> Result<&'a [T]> {
        if v.len() != self.group.order() {
            return Err(self.invalid(format!("{what} has {} entries but the group has order {}", v.len(), self.group.order())));
        }
        Ok(v)
    }

    fn global(&self, algebra: &AlgebraDoc, maps: &[Vec<Vec<String>>]) -> Result<GlobalAction> {
        let a = self.algebra(algebra)?;
        let n = a.dim();
        let mut auto = Vec::new();
        for m in self.per_element("maps", maps)? {
            if m.len() != n {
                return Err(self.invalid(format!("map has {} rows where {n} were expected", m.len())));
            }
            let cols = m.iter().map(|r| self.vector(n, r)).collect::<Result<Vec<_>>>()?;
            auto.push(self.wrap(LinearMap::from_columns(n, self.field, cols))?);
        }
        self.wrap(GlobalAction::new(self.group.clone(), a, auto))
    }

    fn object(&self, o: &ObjectDoc, earlier: &[(String, Object)]) -> Result<Object> {
        match o {
            ObjectDoc::Algebra(d) => Ok(Object::Algebra { algebra: self.graded(d)?, labels: d.labels.clone() }),
            ObjectDoc::PartialAction { algebra, domains, maps } => {
                let a = self.algebra(algebra)?;
                let n = a.dim();
                let g = &self.group;
                let domains = self.per_element("domains", domains)?;
                let maps = self.per_element("maps", maps)?;
                let mut graphs = Vec::with_capacity(g.order());
                for t in g.elements() {
                    let xs = &domains[g.inv(t)];
                    if xs.len() != maps[t].len() {
                        return Err(self.invalid(format!("maps[{t}] has {} rows but D_(t^-1) lists {}", maps[t].len(), xs.len())));
                    }
                    let mut pairs = Vec::new();
                    for (x, y) in xs.iter().zip(&maps[t]) {
                        pairs.push((self.vector(n, x)?, self.vector(n, y)?));
                    }
                    graphs.push(pairs);
                }
                let pa = self.wrap(PartialAction::from_graphs(g.clone(), a, graphs))?;
                for t in g.elements() {
                    let listed = Subspace::span_of(n, self.field, domains[t].iter().map(|r| self.vector(n, r)).collect::<Result<Vec<_>>>()?);
                    if &listed != pa.domain(t) {
                        return Err(self.invalid(format!("domains[{t}] is not the image of alpha_{t}")));
                    }
                }
                Ok(Object::PartialAction(self.wrap(pa.validate_partial())?))
            }
            ObjectDoc::GlobalAction { algebra, maps, ideal } => {
                let beta = self.global(algebra, maps)?;
                match ideal {
                    None => Ok(Object::GlobalAction(beta)),
                    Some(rows) => {
                        let n = beta.algebra().dim();
                        let v = rows.iter().map(|r| self.vector(n, r)).collect::<Result<Vec<_>>>()?;
                        let ideal = Subspace::span_of(n, self.field, v);
                        Ok(Object::Restriction(self.wrap(restrict_global(&beta, &ideal))?))
                    }
                }
            }
            ObjectDoc::Context { a, b, x, y, pairings } => {
                let a = self.graded(a)?;
                let b = self.graded(b)?;
                let (dx, dy) = (x.degree.len(), y.degree.len());
                let tables = ContextTables {
                    ax: self.triples(dx, &pairings.ax)?,
                    xb: self.triples(dx, &pairings.xb)?,
                    by: self.triples(dy, &pairings.by)?,
                    ya: self.triples(dy, &pairings.ya)?,
                    xy: self.triples(a.dim(), &pairings.xy)?,
                    yx: self.triples(b.dim(), &pairings.yx)?,
                };
                Ok(Object::Context(self.wrap(AbstractContext::from_parts(&a, &b, &x.degree, &y.degree, &tables))?))
            }
            ObjectDoc::Map { source, target, columns } => {
                let find = |name: &str| {
                    earlier.iter().find(|(n, _)| n == name).and_then(|(_, o)| match o {
                        Object::Algebra { algebra, .. } => Some(algebra),
                        _ => None,
                    })
                };
                let s = find(source).ok_or_else(|| self.invalid(format!("no earlier algebra named `{source}`")))?;
                let t = find(target).ok_or_else(|| self.invalid(format!("no earlier algebra named `{target}`")))?;
                if columns.len() != s.dim() {
                    return Err(self.invalid(format!("map has {} rows but `{source}` has dim {}", columns.len(), s.dim())));
                }
                let cols = columns.iter().map(|r| self.vector(t.dim(), r)).collect::<Result<Vec<_>>>()?;
                self.wrap(s.check_graded_homomorphism(t, &cols))?;
                let map = self.wrap(LinearMap::from_columns(t.dim(), self.field, cols))?;
                Ok(Object::Map { source: source.clone(), target: target.clone(), map })
            }
        }
    }
}

/// Parses and validates every object. Scalars are read in `field` when given, otherwise in the
/// document's own field.
pub fn parse_document(text: &str, field: Option<Field>) -> Result<Document> {
    let doc: DocumentDoc =
        serde_json::from_str(text).map_err(|e| Error::ParseError { line: e.line(), message: e.to_string() })?;
    from_doc(&doc, field)
}

pub fn from_doc(doc: &DocumentDoc, field: Option<Field>) -> Result<Document> {
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::ValidationError {
            object: "document".into(),
            detail: format!("format_version `{}` is not supported; expected `{FORMAT_VERSION}`", doc.format_version),
        });
    }
    let field = match field {
        Some(f) => f,
        None => doc.field.parse().map_err(|e: Error| Error::ValidationError { object: "document".into(), detail: e.to_string() })?,
    };
    let g = &doc.group;
    let invalid_group = |e: Error| Error::ValidationError { object: "group".into(), detail: e.to_string() };
    if g.order != g.table.len() {
        return Err(invalid_group(Error::DimensionError { expected: g.order, found: g.table.len() }));
    }
    let group = FiniteGroup::validate(g.table.clone(), g.identity).and_then(|h| h.with_labels(g.labels.clone())).map_err(invalid_group)?;
    let mut objects: Vec<(String, Object)> = Vec::new();
    for o in &doc.objects {
        if objects.iter().any(|(n, _)| *n == o.name) {
            return Err(Error::ValidationError { object: o.name.clone(), detail: "duplicate object name".into() });
        }
        let loader = Loader { field, group: group.clone(), object: o.name.clone() };
        let v = loader.object(&o.object, &objects)?;
        objects.push((o.name.clone(), v));
    }
    Ok(Document { field, group, objects })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, group_algebra};

    const Q: Field = Field::Rationals;

    fn f1_doc() -> Document {
        let f1 = fixture("F1", Q).unwrap();
        Document::new(Q, FiniteGroup::cyclic(2)).with("F1", Object::Algebra { algebra: f1.algebra().unwrap().clone(), labels: None })
    }

    #[test]
    fn round_trips() {
        let d = f1_doc();
        let back = parse_document(&d.to_json(), None).unwrap();
        assert_eq!(back, d);
        for id in ["F3", "F6", "F1M2"] {
            let f = fixture(id, Q).unwrap();
            let o = match f.payload {
                crate::fixtures::Payload::Restriction(r) => Object::Restriction(r),
                crate::fixtures::Payload::Context(c) => Object::Context(c),
                crate::fixtures::Payload::Algebra(_) => unreachable!(),
            };
            let g = match &o {
                Object::Restriction(r) => r.beta.group().clone(),
                _ => FiniteGroup::cyclic(2),
            };
            let d = Document::new(Q, g).with(id, o);
            assert_eq!(parse_document(&d.to_json(), None).unwrap(), d);
        }
        let pa = fixture("F6", Q).unwrap().restriction().unwrap().alpha.clone();
        let d = Document::new(Q, FiniteGroup::cyclic(3)).with("alpha", Object::PartialAction(pa));
        assert_eq!(parse_document(&d.to_json(), None).unwrap(), d);
    }

    #[test]
    fn wrong_degree_length_is_a_validation_error() {
        let mut doc = f1_doc().to_doc();
        if let ObjectDoc::Algebra(a) = &mut doc.objects[0].object {
            a.degree = Some(vec![0]);
        }
        let e = from_doc(&doc, None).unwrap_err();
        assert!(matches!(e, Error::ValidationError { ref object, .. } if object == "F1"), "{e}");
    }

    #[test]
    fn non_associative_constants_name_the_triple() {
        let mut doc = f1_doc().to_doc();
        if let ObjectDoc::Algebra(a) = &mut doc.objects[0].object {
            // u_1 u_g = u_g becomes 2 u_g, so (u_1 u_1) u_g = 2 u_g but u_1 (u_1 u_g) = 4 u_g
            let k = a.sc.iter().position(|(i, j, _)| (*i, *j) == (0, 1)).unwrap();
            a.sc[k].2 = vec!["0".into(), "2".into()];
        }
        let e = from_doc(&doc, None).unwrap_err();
        assert_eq!(
            e.to_string(),
            "invalid object `F1`: structure constants are not associative on basis triple (0, 0, 1)"
        );
    }

    #[test]
    fn syntax_errors_carry_a_line() {
        let text = "{\n  \"format_version\": \"1\",\n  oops\n}";
        assert!(matches!(parse_document(text, None), Err(Error::ParseError { line: 3, .. })));
    }

    #[test]
    fn fractions_reduce_mod_p() {
        let f = Field::prime(7).unwrap();
        assert_eq!(parse_scalar(f, "1/2").unwrap(), f.from_i64(4));
        let d = Document::new(f, FiniteGroup::cyclic(2)).with("kC2", Object::Algebra { algebra: group_algebra(&FiniteGroup::cyclic(2), f), labels: None });
        assert_eq!(parse_document(&d.to_json(), None).unwrap(), d);
    }
}
