//! Breadth-first enumeration of crystal graphs, the property harness and
//! graph export.
//!
//! Enumeration proceeds one depth level at a time. The frontier is expanded in
//! parallel, then the new elements are sorted and numbered, so node ids and
//! edge order never depend on the thread schedule.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::cartan::{CartanDatum, CartanSpec, Weight};
use crate::crystal::{self, apply_op, Direction, Structure};
use crate::hw::{self, HighestWeight};
use crate::io::{self, JsonError};
use crate::render;
use crate::rigged::{RiggedConfiguration, Row};
use crate::star;

/// Which crystal to enumerate.
#[derive(Debug, Clone)]
pub enum Crystal {
    /// `RC(infinity)` with both structures.
    Infinity(Arc<CartanDatum>),
    /// `RC(lambda)`; only the ordinary structure is defined.
    Lambda(HighestWeight),
    /// `RC(lambda)^*`; only the star structure is defined.
    LambdaStar(HighestWeight),
}

impl Crystal {
    pub fn datum(&self) -> &Arc<CartanDatum> {
        match self {
            Crystal::Infinity(d) => d,
            Crystal::Lambda(ctx) | Crystal::LambdaStar(ctx) => ctx.datum(),
        }
    }

    fn lambda(&self) -> Option<&Weight> {
        match self {
            Crystal::Infinity(_) => None,
            Crystal::Lambda(ctx) | Crystal::LambdaStar(ctx) => Some(ctx.lambda()),
        }
    }

    /// `f_a` of the given structure, or `None` when it is zero or undefined.
    pub fn f(&self, rc: &RiggedConfiguration, a: usize, structure: Structure) -> Option<RiggedConfiguration> {
        match (self, structure) {
            (Crystal::Infinity(_), s) => apply_op(rc, a, s, Direction::F, None),
            (Crystal::Lambda(ctx), Structure::Ordinary) => hw::f_lambda(rc, ctx, a).ok().flatten(),
            (Crystal::LambdaStar(ctx), Structure::Star) => hw::f_star_lambda(rc, ctx, a),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub node: usize,
    pub structure: Structure,
    pub target: usize,
}

/// The part of a crystal graph reachable from the generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    datum: Arc<CartanDatum>,
    lambda: Option<Weight>,
    structures: Vec<Structure>,
    max_depth: Option<usize>,
    nodes: Vec<RiggedConfiguration>,
    depth: Vec<usize>,
    /// The first edge reaching each node; `None` for the generator.
    parent: Vec<Option<Edge>>,
    edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn datum(&self) -> &Arc<CartanDatum> {
        &self.datum
    }

    pub fn structures(&self) -> &[Structure] {
        &self.structures
    }

    pub fn max_depth(&self) -> Option<usize> {
        self.max_depth
    }

    pub fn nodes(&self) -> &[RiggedConfiguration] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: usize) -> &RiggedConfiguration {
        &self.nodes[id]
    }

    pub fn depth(&self, id: usize) -> usize {
        self.depth[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Linear scan; build a map with [`CrystalGraph::index`] for repeated use.
    pub fn find(&self, rc: &RiggedConfiguration) -> Option<usize> {
        self.nodes.iter().position(|x| x == rc)
    }

    pub fn index(&self) -> HashMap<&RiggedConfiguration, usize> {
        self.nodes.iter().enumerate().map(|(i, x)| (x, i)).collect()
    }

    /// Operators leading from the generator to `id`, in the order applied.
    pub fn word(&self, id: usize) -> Vec<(Structure, usize)> {
        let mut out = Vec::new();
        let mut cur = id;
        while let Some(e) = self.parent[cur] {
            out.push((e.structure, e.node));
            cur = e.source;
        }
        out.reverse();
        out
    }
}

/// Enumerates everything reachable from the generator by at most `max_depth`
/// operators of the given structures. `None` runs to closure, which only
/// terminates for finite crystals. Structures the crystal does not carry are
/// ignored.
pub fn bfs(crystal: &Crystal, structures: &[Structure], max_depth: Option<usize>) -> CrystalGraph {
    let mut structures = structures.to_vec();
    structures.sort();
    structures.dedup();
    let datum = crystal.datum().clone();
    let generator = RiggedConfiguration::empty(datum.clone());
    let mut index: HashMap<RiggedConfiguration, usize> = HashMap::from([(generator.clone(), 0)]);
    let mut graph = CrystalGraph {
        datum: datum.clone(),
        lambda: crystal.lambda().cloned(),
        structures: structures.clone(),
        max_depth,
        nodes: vec![generator],
        depth: vec![0],
        parent: vec![None],
        edges: Vec::new(),
    };
    let mut frontier: Vec<usize> = vec![0];
    let mut level = 0;
    while !frontier.is_empty() && max_depth.is_none_or(|d| level < d) {
        let expanded: Vec<Vec<(usize, Structure, RiggedConfiguration)>> = frontier
            .par_iter()
            .map(|&id| {
                let x = &graph.nodes[id];
                let mut out = Vec::new();
                for &s in &structures {
                    for a in datum.nodes() {
                        if let Some(y) = crystal.f(x, a, s) {
                            out.push((a, s, y));
                        }
                    }
                }
                out
            })
            .collect();
        let mut fresh: Vec<&RiggedConfiguration> = expanded
            .iter()
            .flatten()
            .map(|(_, _, y)| y)
            .filter(|y| !index.contains_key(*y))
            .collect();
        fresh.par_sort();
        fresh.dedup();
        let first_new = graph.nodes.len();
        for y in fresh {
            index.insert(y.clone(), graph.nodes.len());
            graph.nodes.push(y.clone());
            graph.depth.push(level + 1);
            graph.parent.push(None);
        }
        for (&source, outs) in frontier.iter().zip(&expanded) {
            for (a, s, y) in outs {
                let target = index[y];
                let edge = Edge {
                    source,
                    node: *a,
                    structure: *s,
                    target,
                };
                if target >= first_new && graph.parent[target].is_none() {
                    graph.parent[target] = Some(edge);
                }
                graph.edges.push(edge);
            }
        }
        frontier = (first_new..graph.nodes.len()).collect();
        level += 1;
    }
    graph
}

/// Properties checked by [`check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// `f_a` and `f_a^*` are never zero.
    Cond1,
    /// `f_a^* f_b = f_b f_a^*` for `a != b`.
    Cond2,
    /// `kappa_a >= 0`.
    Cond3,
    /// `kappa_a = 0` implies `f_a = f_a^*`.
    Cond4,
    /// `kappa_a >= 1` implies `f_a` keeps `epsilon_a^*` and `f_a^*` keeps `epsilon_a`.
    Cond5,
    /// `kappa_a >= 2` implies `f_a f_a^* = f_a^* f_a`.
    Cond6,
    /// `* * = id`, `*` keeps the weight.
    Involution,
    /// `e_a f_a = id`, `f_a e_a = id` where defined, and the same for the star structure.
    Inverse,
    /// `f_a^*`, `e_a^*` keep every other rigging; `f_a`, `e_a` keep every other corigging.
    Labels,
    /// Formula and operational `epsilon_a`, `epsilon_a^*` agree; `epsilon_a^* = epsilon_a *`.
    Epsilon,
    /// `wt(f_a b) = wt(b) - alpha_a` and `phi_a - epsilon_a = <h_a, wt>` in both structures.
    Weight,
    /// `e_a^* = * e_a *` and `f_a^* = * f_a *`.
    Conjugation,
    /// Convexity of vacancy numbers, the second-difference identity and stabilization.
    Vacancy,
    /// `tau(b) = epsilon(* b)` and `epsilon(b) = tau(* b)`.
    Tau,
}

impl Property {
    pub const ALL: [Property; 14] = [
        Property::Cond1,
        Property::Cond2,
        Property::Cond3,
        Property::Cond4,
        Property::Cond5,
        Property::Cond6,
        Property::Involution,
        Property::Inverse,
        Property::Labels,
        Property::Epsilon,
        Property::Weight,
        Property::Conjugation,
        Property::Vacancy,
        Property::Tau,
    ];

    /// The six bicrystal conditions.
    pub const BICRYSTAL: [Property; 6] = [
        Property::Cond1,
        Property::Cond2,
        Property::Cond3,
        Property::Cond4,
        Property::Cond5,
        Property::Cond6,
    ];

    pub fn name(self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default()
    }

    /// Parses a comma-separated list; `all` and `bicrystal` expand.
    pub fn parse_list(text: &str) -> Result<Vec<Property>, String> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "all" => out.extend(Property::ALL),
                "bicrystal" => out.extend(Property::BICRYSTAL),
                _ => out.push(
                    Property::ALL
                        .into_iter()
                        .find(|p| p.name() == item)
                        .ok_or_else(|| format!("unknown property `{item}`"))?,
                ),
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub element: Value,
    /// `f`/`f*` operators leading to the element from the generator.
    pub word: Vec<String>,
    pub node: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub property: Property,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub cartan: String,
    pub max_depth: usize,
    pub elements: usize,
    pub results: Vec<PropertyResult>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.failed == 0)
    }

    pub fn result(&self, property: Property) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.property == property)
    }
}

/// Checks every property on every element of `RC(infinity)` up to `max_depth`.
pub fn check(datum: &Arc<CartanDatum>, max_depth: usize, properties: &[Property]) -> CheckReport {
    let graph = bfs(
        &Crystal::Infinity(datum.clone()),
        &[Structure::Ordinary],
        Some(max_depth),
    );
    check_graph(&graph, properties)
}

/// Runs the checks on the nodes of an `RC(infinity)` graph.
pub fn check_graph(graph: &CrystalGraph, properties: &[Property]) -> CheckReport {
    let outcomes: Vec<Vec<Result<(), Violation>>> = graph
        .nodes
        .par_iter()
        .map(|x| properties.iter().map(|&p| check_element(x, p)).collect())
        .collect();
    let results = properties
        .iter()
        .enumerate()
        .map(|(k, &property)| {
            let mut result = PropertyResult {
                property,
                passed: 0,
                failed: 0,
                counterexample: None,
            };
            for (id, per_node) in outcomes.iter().enumerate() {
                match &per_node[k] {
                    Ok(()) => result.passed += 1,
                    Err(v) => {
                        result.failed += 1;
                        result.counterexample.get_or_insert_with(|| Counterexample {
                            element: io::to_value(&graph.nodes[id]),
                            word: word_strings(&graph.word(id)),
                            node: v.node,
                            detail: v.detail.clone(),
                        });
                    }
                }
            }
            result
        })
        .collect();
    CheckReport {
        cartan: graph.datum.to_string(),
        max_depth: graph.max_depth.unwrap_or(0),
        elements: graph.nodes.len(),
        results,
    }
}

pub fn word_strings(word: &[(Structure, usize)]) -> Vec<String> {
    word.iter().map(|&(s, a)| op_label(s, a)).collect()
}

fn op_label(structure: Structure, a: usize) -> String {
    match structure {
        Structure::Ordinary => format!("f_{a}"),
        Structure::Star => format!("f*_{a}"),
    }
}

/// A failed property on one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub node: Option<usize>,
    pub detail: String,
}

fn ensure(cond: bool, node: Option<usize>, detail: impl FnOnce() -> String) -> Result<(), Violation> {
    if cond {
        Ok(())
    } else {
        Err(Violation { node, detail: detail() })
    }
}

/// Evaluates one property on one element of `RC(infinity)`.
pub fn check_element(x: &RiggedConfiguration, property: Property) -> Result<(), Violation> {
    use crystal::{e, epsilon, epsilon_by_iteration, f, phi};
    use star::{e_star, epsilon_star, f_star, involute, kappa, phi_star};
    let datum = x.datum();
    let nodes = || datum.nodes();
    match property {
        Property::Cond1 => {
            for a in nodes() {
                for s in [Structure::Ordinary, Structure::Star] {
                    ensure(apply_op(x, a, s, Direction::F, None).is_some(), Some(a), || {
                        format!("{} is zero", op_label(s, a))
                    })?;
                }
            }
        }
        Property::Cond2 => {
            for a in nodes() {
                for b in nodes().filter(|&b| b != a) {
                    ensure(f_star(&f(x, b), a) == f(&f_star(x, a), b), Some(a), || {
                        format!("f*_{a} f_{b} != f_{b} f*_{a}")
                    })?;
                }
            }
        }
        Property::Cond3 => {
            for a in nodes() {
                let k = kappa(x, a);
                ensure(k >= 0, Some(a), || format!("kappa = {k}"))?;
            }
        }
        Property::Cond4 => {
            for a in nodes().filter(|&a| kappa(x, a) == 0) {
                ensure(f(x, a) == f_star(x, a), Some(a), || "kappa = 0 but f != f*".into())?;
            }
        }
        Property::Cond5 => {
            for a in nodes().filter(|&a| kappa(x, a) >= 1) {
                ensure(epsilon_star(&f(x, a), a) == epsilon_star(x, a), Some(a), || {
                    "f changes epsilon*".into()
                })?;
                ensure(epsilon(&f_star(x, a), a) == epsilon(x, a), Some(a), || {
                    "f* changes epsilon".into()
                })?;
            }
        }
        Property::Cond6 => {
            for a in nodes().filter(|&a| kappa(x, a) >= 2) {
                ensure(f(&f_star(x, a), a) == f_star(&f(x, a), a), Some(a), || {
                    "f f* != f* f".into()
                })?;
            }
        }
        Property::Involution => {
            let y = involute(x);
            ensure(&involute(&y) == x, None, || "** != id".into())?;
            ensure(y.weight() == x.weight(), None, || "* changes the weight".into())?;
        }
        Property::Inverse => {
            for a in nodes() {
                ensure(e(&f(x, a), a).as_ref() == Some(x), Some(a), || "e f != id".into())?;
                ensure(e_star(&f_star(x, a), a).as_ref() == Some(x), Some(a), || {
                    "e* f* != id".into()
                })?;
                if let Some(y) = e(x, a) {
                    ensure(&f(&y, a) == x, Some(a), || "f e != id".into())?;
                }
                if let Some(y) = e_star(x, a) {
                    ensure(&f_star(&y, a) == x, Some(a), || "f* e* != id".into())?;
                }
            }
        }
        Property::Labels => {
            for a in nodes() {
                ensure(one_row_grows(x, &f_star(x, a), a, Label::Rigging), Some(a), || {
                    "f* changes another rigging".into()
                })?;
                ensure(one_row_grows(x, &f(x, a), a, Label::Corigging), Some(a), || {
                    "f changes another corigging".into()
                })?;
                if let Some(y) = e_star(x, a) {
                    ensure(one_row_grows(&y, x, a, Label::Rigging), Some(a), || {
                        "e* changes another rigging".into()
                    })?;
                }
                if let Some(y) = e(x, a) {
                    ensure(one_row_grows(&y, x, a, Label::Corigging), Some(a), || {
                        "e changes another corigging".into()
                    })?;
                }
            }
        }
        Property::Epsilon => {
            for a in nodes() {
                let (eps, eps_star) = (epsilon(x, a), epsilon_star(x, a));
                let op = epsilon_by_iteration(x, a, Structure::Ordinary);
                let op_star = epsilon_by_iteration(x, a, Structure::Star);
                ensure(eps == op, Some(a), || {
                    format!("epsilon formula {eps}, operational {op}")
                })?;
                ensure(eps_star == op_star, Some(a), || {
                    format!("epsilon* formula {eps_star}, operational {op_star}")
                })?;
                ensure(eps_star == epsilon(&involute(x), a), Some(a), || {
                    "epsilon* != epsilon *".into()
                })?;
                ensure(epsilon(&f(x, a), a) == eps + 1, Some(a), || {
                    "epsilon(f b) != epsilon(b) + 1".into()
                })?;
            }
        }
        Property::Weight => {
            let wt = x.weight();
            for a in nodes() {
                let h = datum.pairing(a, &wt).expect("weight has the datum's rank");
                let alpha = Weight::simple_root(datum.rank(), a);
                ensure(f(x, a).weight() == &wt - &alpha, Some(a), || {
                    "wt(f b) != wt(b) - alpha".into()
                })?;
                ensure(f_star(x, a).weight() == &wt - &alpha, Some(a), || {
                    "wt(f* b) != wt(b) - alpha".into()
                })?;
                ensure(phi(x, a) - epsilon(x, a) == h, Some(a), || {
                    "phi - epsilon != <h, wt>".into()
                })?;
                ensure(phi_star(x, a) - epsilon_star(x, a) == h, Some(a), || {
                    "phi* - epsilon* != <h, wt>".into()
                })?;
            }
        }
        Property::Conjugation => {
            let y = involute(x);
            for a in nodes() {
                ensure(f_star(x, a) == involute(&f(&y, a)), Some(a), || "f* != * f *".into())?;
                ensure(e_star(x, a) == e(&y, a).map(|z| involute(&z)), Some(a), || {
                    "e* != * e *".into()
                })?;
            }
        }
        Property::Vacancy => check_vacancies(x)?,
        Property::Tau => {
            let y = involute(x);
            ensure(hw::tau(x) == hw::epsilon_weight(&y), None, || {
                "tau(b) != epsilon(* b)".into()
            })?;
            ensure(hw::epsilon_weight(x) == hw::tau(&y), None, || {
                "epsilon(b) != tau(* b)".into()
            })?;
        }
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Label {
    Rigging,
    Corigging,
}

fn labelled_rows(x: &RiggedConfiguration, a: usize, label: Label) -> Vec<Row> {
    let mut rows: Vec<Row> = x
        .rows_with_vacancies(a)
        .into_iter()
        .map(|(r, p)| match label {
            Label::Rigging => r,
            Label::Corigging => Row::new(r.len, p - r.rigging),
        })
        .collect();
    rows.sort();
    rows
}

/// `y` is `x` with one row of part `a` (possibly of length 0) lengthened by
/// one box, every other row keeping its label.
fn one_row_grows(x: &RiggedConfiguration, y: &RiggedConfiguration, a: usize, label: Label) -> bool {
    let others_equal = x
        .datum()
        .nodes()
        .filter(|&b| b != a)
        .all(|b| labelled_rows(x, b, label) == labelled_rows(y, b, label));
    if !others_equal {
        return false;
    }
    let mut old = labelled_rows(x, a, label);
    let mut new = labelled_rows(y, a, label);
    // drop the rows common to both
    let mut kept_old = Vec::new();
    for r in old.drain(..) {
        if let Some(pos) = new.iter().position(|s| *s == r) {
            new.remove(pos);
        } else {
            kept_old.push(r);
        }
    }
    match (kept_old.as_slice(), new.as_slice()) {
        ([], [n]) => n.len == 1,
        ([o], [n]) => n.len == o.len + 1,
        _ => false,
    }
}

fn check_vacancies(x: &RiggedConfiguration) -> Result<(), Violation> {
    let datum = x.datum();
    for a in datum.nodes() {
        let part = x.part(a);
        let bound = part.max_len() + 2;
        let p = |i: usize| if i == 0 { 0 } else { x.vacancy(a, i) };
        for i in 1..=bound {
            let second = -p(i - 1) + 2 * p(i) - p(i + 1);
            if part.multiplicity(i) == 0 {
                ensure(second >= 0, Some(a), || format!("p^({a}) is not convex at {i}"))?;
            }
            let m: i64 = datum
                .nodes()
                .map(|b| datum.entry(a, b) * x.part(b).multiplicity(i) as i64)
                .sum();
            ensure(-m == second, Some(a), || {
                format!("second difference of p^({a}) at {i} is {second}, expected {}", -m)
            })?;
        }
        let stable = datum
            .nodes()
            .filter(|&b| datum.entry(a, b) != 0)
            .map(|b| x.part(b).max_len())
            .max()
            .unwrap_or(0);
        let inf = x.vacancy_infinity(a);
        for i in stable.max(1)..=stable + 2 {
            ensure(p(i) == inf, Some(a), || format!("p^({a})_{i} != p^({a})_inf"))?;
        }
    }
    Ok(())
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error(transparent)]
    Json(#[from] JsonError),
    #[error("invalid graph document: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

pub fn export(graph: &CrystalGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(graph),
        ExportFormat::Json => serde_json::to_string_pretty(&to_json_value(graph)).expect("graph serializes"),
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(graph: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (id, x) in graph.nodes.iter().enumerate() {
        let label: String = render::horizontal(x)
            .lines()
            .map(|l| format!("{}\\l", dot_escape(l)))
            .collect();
        let _ = writeln!(out, "  n{id} [label=\"{label}\"];");
    }
    for e in &graph.edges {
        let _ = writeln!(
            out,
            "  n{} -> n{} [label=\"{}\"];",
            e.source,
            e.target,
            op_label(e.structure, e.node)
        );
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    cartan: CartanSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<Weight>,
    structures: Vec<Structure>,
    max_depth: Option<usize>,
    nodes: Vec<NodeDocument>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeDocument {
    id: usize,
    depth: usize,
    parent: Option<Edge>,
    nu: BTreeMap<String, Vec<(usize, i64)>>,
}

pub fn to_json_value(graph: &CrystalGraph) -> Value {
    let doc = GraphDocument {
        cartan: graph.datum.spec().clone(),
        lambda: graph.lambda.clone(),
        structures: graph.structures.clone(),
        max_depth: graph.max_depth,
        nodes: graph
            .nodes
            .iter()
            .enumerate()
            .map(|(id, x)| NodeDocument {
                id,
                depth: graph.depth[id],
                parent: graph.parent[id],
                nu: io::nu_map(x),
            })
            .collect(),
        edges: graph.edges.clone(),
    };
    serde_json::to_value(doc).expect("graph serializes")
}

/// Reads a graph written by [`export`] in JSON form.
pub fn graph_from_json(text: &str) -> Result<CrystalGraph, GraphError> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(JsonError::from)?;
    let datum = Arc::new(CartanDatum::from_spec(&doc.cartan).map_err(JsonError::from)?);
    let mut graph = CrystalGraph {
        datum: datum.clone(),
        lambda: doc.lambda,
        structures: doc.structures,
        max_depth: doc.max_depth,
        nodes: Vec::with_capacity(doc.nodes.len()),
        depth: Vec::with_capacity(doc.nodes.len()),
        parent: Vec::with_capacity(doc.nodes.len()),
        edges: doc.edges,
    };
    for (k, node) in doc.nodes.into_iter().enumerate() {
        if node.id != k {
            return Err(GraphError::Format(format!("node {k} has id {}", node.id)));
        }
        let rows = io::rows_from_nu(&datum, &node.nu)?;
        let x = RiggedConfiguration::from_rows(datum.clone(), rows).map_err(JsonError::from)?;
        graph.nodes.push(x);
        graph.depth.push(node.depth);
        graph.parent.push(node.parent);
    }
    let n = graph.nodes.len();
    if let Some(e) = graph.edges.iter().find(|e| e.source >= n || e.target >= n) {
        return Err(GraphError::Format(format!(
            "edge {} -> {} has a missing endpoint",
            e.source, e.target
        )));
    }
    Ok(graph)
}

/// `{"nodes": n, "by_depth": [...]}`, used by the CLI.
pub fn summary(graph: &CrystalGraph) -> Value {
    let max = graph.depth.iter().copied().max().unwrap_or(0);
    let mut by_depth = vec![0usize; max + 1];
    for &d in &graph.depth {
        by_depth[d] += 1;
    }
    json!({"nodes": graph.nodes.len(), "edges": graph.edges.len(), "by_depth": by_depth})
}
