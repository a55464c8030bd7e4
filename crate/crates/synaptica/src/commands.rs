//! The `check`, `spectral` and `states` commands.

use serde_json::{json, Map, Value};

use synaptica_core::effect::{check_ea_axioms, oml_to_ea};
use synaptica_core::mv::{check_mv_axioms, ea_to_mv, mv_to_ea};
use synaptica_core::polytope::{self, Infeasibility, LinearSystem, Vertices, Q};
use synaptica_core::state::{
    ea_state_system, extremal_commutative_characterization, is_ea_state, simplex_system,
    CommutativeFlags,
};
use synaptica_core::stone::functional_representation;
use synaptica_core::synaptic::{self, SpectralResolution};
use synaptica_core::{
    tol, Axiom, AxiomViolation, EffectAlgebra, Error, FnElement, Ortholattice, SymMatrix,
    SynapticElement,
};

use crate::document::{self, Body, Document, Labels, LoadError, StateValues, Workspace, KINDS};
use crate::report::{num, nums, Report};

fn law(name: &str, violation: Option<Vec<String>>) -> Value {
    json!({
        "law": name,
        "passed": violation.is_none(),
        "witness": violation.map_or(Value::Null, |w| json!(w)),
    })
}

fn axiom_law(axiom: Axiom, v: Option<&AxiomViolation>, labels: &Labels) -> Value {
    law(
        axiom.name(),
        v.map(|v| {
            v.witness
                .iter()
                .map(|&i| labels.name(i).to_string())
                .collect()
        }),
    )
}

fn laws_pass(laws: &[Value]) -> bool {
    laws.iter().all(|l| l["passed"] == Value::Bool(true))
}

fn doc_result(doc: &Document, laws: Vec<Value>, properties: Map<String, Value>) -> Value {
    let mut m = Map::new();
    m.insert("label".into(), json!(doc.label));
    m.insert("kind".into(), json!(doc.body.kind()));
    m.insert("valid".into(), json!(laws_pass(&laws)));
    m.insert("laws".into(), Value::Array(laws));
    if !properties.is_empty() {
        m.insert("properties".into(), Value::Object(properties));
    }
    Value::Object(m)
}

fn classification(c: &synaptica_core::Classification) -> Value {
    json!({
        "lattice": c.is_lattice,
        "bounded": c.is_bounded,
        "distributive": c.is_distributive,
        "complemented": c.is_complemented,
        "boolean": c.is_boolean,
        "orthomodular": c.is_oml,
        "directed": c.is_directed,
        "dedekind_sigma_complete": c.is_dedekind_sigma_complete,
    })
}

/// Filters documents by `--kind`, rejecting unknown kinds.
fn selected<'a>(ws: &'a Workspace, kind: Option<&str>) -> Result<Vec<&'a Document>, LoadError> {
    if let Some(k) = kind {
        if !KINDS.contains(&k) {
            return Err(LoadError::UnknownKind(k.to_string()));
        }
    }
    let docs: Vec<&Document> = ws
        .documents
        .iter()
        .filter(|d| kind.is_none_or(|k| d.body.kind() == k))
        .collect();
    if docs.is_empty() {
        return Err(LoadError::Schema {
            document: "file".into(),
            message: format!("no document of kind {}", kind.unwrap_or("any")),
        });
    }
    Ok(docs)
}

/// Axiom audit of every selected document.
pub fn check(ws: &Workspace, kind: Option<&str>, report_tol: f64) -> Result<Report, LoadError> {
    let mut results = Vec::new();
    for doc in selected(ws, kind)? {
        results.push(check_document(ws, doc, report_tol)?);
    }
    let valid = results.iter().all(|r| r["valid"] == Value::Bool(true));
    Ok(Report {
        body: json!({"command": "check", "valid": valid, "documents": results}),
        status: if valid { 0 } else { 1 },
    })
}

fn check_document(ws: &Workspace, doc: &Document, report_tol: f64) -> Result<Value, LoadError> {
    let mut props = Map::new();
    let laws = match &doc.body {
        Body::Poset(b) => {
            let (labels, pairs) = document::poset_parts(&doc.label, &b.elements, &b.leq)?;
            match document::build_poset(&labels, &pairs) {
                Ok(p) => {
                    props.insert("classification".into(), classification(&p.classify()));
                    vec![law("antisymmetry", None)]
                }
                Err(Error::Axiom(v)) => vec![axiom_law(v.axiom, Some(&v), &labels)],
                Err(e) => return Err(schema(doc, e)),
            }
        }
        Body::Ortholattice(b) => {
            let parts = document::ortholattice_parts(&doc.label, b)?;
            let labels = &parts.labels;
            match document::build_poset(labels, &parts.pairs) {
                Err(Error::Axiom(v)) => vec![axiom_law(v.axiom, Some(&v), labels)],
                Err(e) => return Err(schema(doc, e)),
                Ok(poset) => {
                    let mut laws = vec![law("antisymmetry", None)];
                    for (a, v) in Ortholattice::laws(&poset, &parts.perp) {
                        laws.push(axiom_law(a, v.as_ref(), labels));
                    }
                    let declared =
                        poset.bottom() == Some(parts.zero) && poset.top() == Some(parts.one);
                    laws.push(law(
                        "declared zero and one",
                        (!declared).then(|| vec![b.zero.clone(), b.one.clone()]),
                    ));
                    if laws_pass(&laws) {
                        let ol = Ortholattice::new(poset, parts.perp.clone())
                            .map_err(|e| schema(doc, e))?;
                        props.insert("classification".into(), classification(&ol.classify()));
                        props.insert(
                            "orthomodular_witness".into(),
                            ol.orthomodular_witness().map_or(Value::Null, |(a, b)| {
                                json!([labels.name(a), labels.name(b)])
                            }),
                        );
                    }
                    laws
                }
            }
        }
        Body::EffectAlgebra(b) => {
            let (labels, table) = document::effect_table(&doc.label, b)?;
            if table.len() > synaptica_core::effect::DEFAULT_MAX_ELEMENTS {
                return Err(schema(
                    doc,
                    Error::TooLarge(table.len(), synaptica_core::effect::DEFAULT_MAX_ELEMENTS),
                ));
            }
            let laws: Vec<Value> = synaptica_core::EffectTable::AXIOMS
                .iter()
                .map(|&a| axiom_law(a, table.violation_of(a).as_ref(), &labels))
                .collect();
            if laws_pass(&laws) {
                let ea = check_ea_axioms(&table).map_err(|e| schema(doc, e))?;
                let perp: Map<String, Value> = (0..ea.len())
                    .map(|e| (labels.name(e).to_string(), json!(labels.name(ea.perp(e)))))
                    .collect();
                props.insert("orthosupplement".into(), Value::Object(perp));
                props.insert("mv_effect_algebra".into(), json!(ea.is_mv_effect_algebra()));
                props.insert(
                    "induced_order".into(),
                    classification(&ea.induced_order().classify()),
                );
            }
            laws
        }
        Body::MvAlgebra(b) => {
            let (labels, table) = document::mv_table(&doc.label, b)?;
            table.check_shape().map_err(|e| schema(doc, e))?;
            let laws: Vec<Value> = synaptica_core::MvTable::AXIOMS
                .iter()
                .map(|&a| axiom_law(a, table.violation_of(a).as_ref(), &labels))
                .collect();
            if laws_pass(&laws) {
                let mv = check_mv_axioms(&table).map_err(|e| schema(doc, e))?;
                props.insert("boolean".into(), json!(mv.is_boolean()));
                let round_trip = mv_to_ea(&mv)
                    .and_then(|ea| ea_to_mv(&ea))
                    .map(|back| back == mv);
                props.insert(
                    "effect_algebra_round_trip".into(),
                    json!(round_trip == Ok(true)),
                );
            }
            laws
        }
        Body::SymMatrix(b) => {
            document::sym_entries(&doc.label, b)?;
            if b.entries.iter().any(|x| !x.is_finite()) {
                return Err(schema(doc, "entries must be finite"));
            }
            match SymMatrix::new(b.n, b.entries.clone()) {
                Ok(a) => {
                    let c = synaptic::classify_spectrum(&a);
                    props.insert("positive".into(), json!(c.positive));
                    props.insert("effect".into(), json!(c.effect));
                    props.insert("projection".into(), json!(c.projection));
                    props.insert("norm".into(), num(a.norm()));
                    vec![law("symmetry", None)]
                }
                Err(Error::NotSymmetric(_)) => {
                    let n = b.n;
                    let (i, j) = (0..n * n)
                        .map(|k| (k / n, k % n))
                        .max_by(|&(i, j), &(k, l)| {
                            let d = |i: usize, j: usize| {
                                (b.entries[i * n + j] - b.entries[j * n + i]).abs()
                            };
                            d(i, j).total_cmp(&d(k, l))
                        })
                        .unwrap_or((0, 0));
                    vec![law(
                        "symmetry",
                        Some(vec![format!("({i}, {j})"), format!("({j}, {i})")]),
                    )]
                }
                Err(e) => return Err(schema(doc, e)),
            }
        }
        Body::FunctionAlgebra(b) => {
            let fs = document::functions(&doc.label, b)?;
            let bad = fs
                .iter()
                .find(|(_, f)| f.values().iter().any(|x| !x.is_finite()));
            let mut elements = Map::new();
            for (name, f) in &fs {
                let c = synaptic::classify_spectrum(f);
                elements.insert(
                    name.clone(),
                    json!({"positive": c.positive, "effect": c.effect, "projection": c.projection}),
                );
            }
            props.insert("points".into(), json!(b.points.len()));
            props.insert("elements".into(), Value::Object(elements));
            vec![law("finite values", bad.map(|(n, _)| vec![n.clone()]))]
        }
        Body::State(b) => check_state(ws, doc, b, report_tol, &mut props)?,
    };
    Ok(doc_result(doc, laws, props))
}

fn schema(doc: &Document, e: impl std::fmt::Display) -> LoadError {
    LoadError::Schema {
        document: doc.label.clone(),
        message: e.to_string(),
    }
}

/// The effect algebra a document denotes (directly, as an OML, or as an
/// MV-algebra), or the reason it is not one.
fn effect_algebra_of(
    doc: &Document,
) -> Result<Option<Result<(Labels, EffectAlgebra), String>>, LoadError> {
    let built = match &doc.body {
        Body::EffectAlgebra(b) => {
            let (labels, table) = document::effect_table(&doc.label, b)?;
            check_ea_axioms(&table).map(|ea| (labels, ea))
        }
        Body::Ortholattice(b) => {
            let parts = document::ortholattice_parts(&doc.label, b)?;
            let built = document::build_poset(&parts.labels, &parts.pairs)
                .and_then(|p| Ortholattice::new(p, parts.perp.clone()))
                .and_then(|ol| {
                    if ol.zero() != parts.zero || ol.one() != parts.one {
                        return Err(
                            AxiomViolation::new(Axiom::Bounded, &[parts.zero, parts.one]).into(),
                        );
                    }
                    oml_to_ea(&ol)
                });
            built.map(|ea| (parts.labels, ea))
        }
        Body::MvAlgebra(b) => {
            let (labels, table) = document::mv_table(&doc.label, b)?;
            check_mv_axioms(&table)
                .and_then(|mv| mv_to_ea(&mv))
                .map(|ea| (labels, ea))
        }
        _ => return Ok(None),
    };
    Ok(Some(built.map_err(|e| e.to_string())))
}

fn check_state(
    ws: &Workspace,
    doc: &Document,
    b: &document::StateBody,
    report_tol: f64,
    props: &mut Map<String, Value>,
) -> Result<Vec<Value>, LoadError> {
    let target = ws.get(&b.over)?;
    props.insert("over".into(), json!(target.label));
    let fails = |ok: bool, w: Vec<String>| (!ok).then_some(w);
    match &target.body {
        Body::FunctionAlgebra(f) => {
            let labels = Labels::new(&target.label, &f.points)?;
            let StateValues::Vector(mu) = document::state_values(&doc.label, b, &labels)? else {
                return Err(schema(doc, "a state on a function algebra is a vector"));
            };
            if mu.len() != labels.len() {
                return Err(schema(
                    doc,
                    format!("expected {} values, found {}", labels.len(), mu.len()),
                ));
            }
            let neg = mu.iter().position(|&m| !(m >= -report_tol));
            let total: f64 = mu.iter().sum();
            Ok(vec![
                law("positive", neg.map(|i| vec![labels.name(i).to_string()])),
                law(
                    "normalized",
                    fails((total - 1.0).abs() <= report_tol, vec![format!("{total}")]),
                ),
            ])
        }
        Body::SymMatrix(m) => {
            document::sym_entries(&target.label, m)?;
            let n = m.n;
            let labels = Labels::new(&target.label, &[target.label.clone()])?;
            let StateValues::Density(d) = document::state_values(&doc.label, b, &labels)? else {
                return Err(schema(doc, "a state on a matrix algebra is a density"));
            };
            if d.len() != n * n {
                return Err(schema(
                    doc,
                    format!("expected {} entries, found {}", n * n, d.len()),
                ));
            }
            match SymMatrix::new(n, d) {
                Err(Error::NotSymmetric(x)) => {
                    Ok(vec![law("symmetry", Some(vec![format!("{x}")]))])
                }
                Err(e) => Err(schema(doc, e)),
                Ok(d) => {
                    let low = synaptic::spectrum(&d).first().copied().unwrap_or(0.0);
                    let trace = d.trace();
                    Ok(vec![
                        law("symmetry", None),
                        law(
                            "positive",
                            fails(low >= -report_tol, vec![format!("{low}")]),
                        ),
                        law(
                            "unit trace",
                            fails((trace - 1.0).abs() <= report_tol, vec![format!("{trace}")]),
                        ),
                    ])
                }
            }
        }
        _ => {
            let Some(built) = effect_algebra_of(target)? else {
                return Err(schema(doc, format!("{} has no states", target.label)));
            };
            let (labels, ea) = match built {
                Ok(x) => x,
                Err(msg) => return Ok(vec![law("target is an effect algebra", Some(vec![msg]))]),
            };
            let StateValues::Table(w) = document::state_values(&doc.label, b, &labels)? else {
                return Err(schema(doc, "a state on an effect algebra is a table"));
            };
            let name = |i: usize| labels.name(i).to_string();
            let range = (0..ea.len()).find(|&e| !(-report_tol..=1.0 + report_tol).contains(&w[e]));
            let unit = (w[ea.one()] - 1.0).abs() <= report_tol;
            let additive = (0..ea.len())
                .flat_map(|e| (0..ea.len()).map(move |f| (e, f)))
                .find(|&(e, f)| {
                    ea.osum(e, f)
                        .is_some_and(|s| (w[e] + w[f] - w[s]).abs() > report_tol)
                });
            let laws = vec![
                law("values in [0, 1]", range.map(|e| vec![name(e)])),
                law("unit", fails(unit, vec![name(ea.one())])),
                law(
                    "additive",
                    additive.map(|(e, f)| vec![name(e), name(f), name(ea.osum(e, f).unwrap())]),
                ),
            ];
            debug_assert_eq!(laws_pass(&laws), is_ea_state(&ea, &w, report_tol));
            Ok(laws)
        }
    }
}

/// One element of a synaptic instance.
enum Element {
    Sym(SymMatrix),
    Fn(FnElement),
}

fn elements(ws: &Workspace) -> Result<Vec<(String, Result<Element, String>)>, LoadError> {
    let mut out = Vec::new();
    for doc in &ws.documents {
        match &doc.body {
            Body::SymMatrix(b) => {
                let m = document::sym_matrix(&doc.label, b)?;
                out.push((
                    doc.label.clone(),
                    m.map(Element::Sym).map_err(|e| e.to_string()),
                ));
            }
            Body::FunctionAlgebra(b) => {
                for (name, f) in document::functions(&doc.label, b)? {
                    out.push((name, Ok(Element::Fn(f))));
                }
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Spectral report for one labeled element, or for every element.
pub fn spectral(ws: &Workspace, label: Option<&str>) -> Result<Report, LoadError> {
    let all = elements(ws)?;
    let chosen: Vec<_> = match label {
        Some(l) => {
            let found: Vec<_> = all.into_iter().filter(|(name, _)| name == l).collect();
            if found.is_empty() {
                return Err(LoadError::UnknownLabel(l.to_string()));
            }
            found
        }
        None => all,
    };
    if chosen.is_empty() {
        return Err(LoadError::Schema {
            document: "file".into(),
            message: "no sym_matrix or function_algebra elements".into(),
        });
    }
    let mut status = 0;
    let reports: Vec<Value> = chosen
        .into_iter()
        .map(|(name, e)| match e {
            Ok(Element::Sym(a)) => element_report(&name, &format!("sym({})", a.n()), &a, |x| {
                x.entries().to_vec()
            }),
            Ok(Element::Fn(f)) => {
                element_report(&name, &format!("function({})", f.len()), &f, |x| {
                    x.values().to_vec()
                })
            }
            Err(msg) => {
                status = 1;
                json!({"label": name, "error": msg})
            }
        })
        .collect();
    Ok(Report {
        body: json!({"command": "spectral", "elements": reports}),
        status,
    })
}

fn element_report<T: SynapticElement>(
    label: &str,
    instance: &str,
    a: &T,
    entries: impl Fn(&T) -> Vec<f64>,
) -> Value {
    let res = SpectralResolution::new(a);
    let dec = synaptic::decompose(a);
    let spectrum: Vec<Value> = res
        .eigenvalues()
        .iter()
        .zip(res.projections())
        .map(|(&l, p)| json!({"value": num(l), "multiplicity": p.inner(p).round() as u64}))
        .collect();
    let class = synaptic::classify_spectrum(a);
    json!({
        "label": label,
        "instance": instance,
        "spectrum": spectrum,
        "lower": num(res.lower()),
        "upper": num(res.upper()),
        "eigenprojections": res.projections().iter().map(|p| nums(&entries(p))).collect::<Vec<_>>(),
        "carrier": nums(&entries(&synaptic::carrier(a))),
        "abs": nums(&entries(&dec.abs)),
        "positive_part": nums(&entries(&dec.pos)),
        "negative_part": nums(&entries(&dec.neg)),
        "positive": class.positive,
        "effect": class.effect,
        "projection": class.projection,
        "residual": num(res.reconstruct().dist(a)),
        "resolution_residual": num(res.resolution_residual()),
    })
}

fn rational_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn system_summary(system: &LinearSystem, names: &[String]) -> Value {
    let term = |row: &[Q]| {
        let mut s = String::new();
        for (x, c) in row.iter().enumerate().filter(|(_, c)| !is_zero(c)) {
            let coeff = c.to_string();
            let (sign, mag) = match coeff.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", coeff),
            };
            if s.is_empty() {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            if mag != "1" {
                s.push_str(&mag);
                s.push(' ');
            }
            s.push_str(&format!("w({})", names[x]));
        }
        s
    };
    let equalities: Vec<String> = system
        .equalities
        .iter()
        .map(|(a, b)| format!("{} = {}", term(a), b))
        .collect();
    json!({
        "variables": system.vars,
        "equalities": equalities,
        "bounds": format!("0 <= w(x) <= 1 for all {} elements", system.vars),
    })
}

fn is_zero(q: &Q) -> bool {
    *q == polytope::q(0)
}

fn certificate(c: &Infeasibility, system: &LinearSystem) -> Value {
    match c {
        Infeasibility::Equalities { multipliers } => json!({
            "type": "equalities",
            "multipliers": rational_strings(multipliers),
            "verified": c.verify(system),
        }),
        Infeasibility::Farkas {
            equality,
            inequality,
        } => json!({
            "type": "farkas",
            "equality_multipliers": rational_strings(equality),
            "inequality_multipliers": rational_strings(inequality),
            "verified": c.verify(system),
        }),
    }
}

fn flags(f: &CommutativeFlags, points: &[String]) -> Value {
    json!({
        "vertex": f.vertex,
        "point_evaluation": f.point_evaluation.map_or(Value::Null, |x| json!(points[x])),
        "multiplicative": f.multiplicative,
        "sharp": f.sharp,
        "min_rule": f.min_rule,
        "agree": f.agree(),
    })
}

/// State-space report: constraints, dimension and extremal states.
pub fn states(ws: &Workspace, kind: Option<&str>, extremal: bool) -> Result<Report, LoadError> {
    let mut results = Vec::new();
    let mut status = 0;
    for doc in selected(ws, kind)? {
        let mut m = Map::new();
        m.insert("label".into(), json!(doc.label));
        m.insert("kind".into(), json!(doc.body.kind()));
        match &doc.body {
            Body::FunctionAlgebra(b) => {
                let fs = document::functions(&doc.label, b)?;
                commutative_states(&mut m, &b.points, extremal, &fs, |mu| nums(mu))?;
            }
            Body::SymMatrix(b) => {
                let a = match document::sym_matrix(&doc.label, b)? {
                    Ok(a) => a,
                    Err(e) => {
                        status = 1;
                        m.insert("error".into(), json!(e.to_string()));
                        results.push(Value::Object(m));
                        continue;
                    }
                };
                let rep = functional_representation(a.n(), std::slice::from_ref(&a))
                    .map_err(|e| schema(doc, e))?;
                let points: Vec<String> = SpectralResolution::new(&a)
                    .eigenvalues()
                    .iter()
                    .map(|l| format!("{l}"))
                    .collect();
                m.insert(
                    "algebra".into(),
                    json!(format!("generated by {} and 1", doc.label)),
                );
                commutative_states(&mut m, &points, extremal, &[], |mu| {
                    nums(rep.density_for(mu).entries())
                })?;
            }
            Body::State(b) => {
                let target = ws.get(&b.over)?;
                m.insert("over".into(), json!(target.label));
                match &target.body {
                    Body::FunctionAlgebra(f) => {
                        let labels = Labels::new(&target.label, &f.points)?;
                        let StateValues::Vector(mu) =
                            document::state_values(&doc.label, b, &labels)?
                        else {
                            return Err(schema(doc, "a state on a function algebra is a vector"));
                        };
                        let pairs = positive_pairs(&document::functions(&target.label, f)?);
                        match extremal_commutative_characterization(&mu, &pairs) {
                            Ok(fl) => {
                                m.insert("flags".into(), flags(&fl, labels.names()));
                            }
                            Err(e) => {
                                status = 1;
                                m.insert("error".into(), json!(e.to_string()));
                            }
                        }
                    }
                    _ => {
                        return Err(schema(
                            doc,
                            "state flags are reported for function algebras only",
                        ))
                    }
                }
            }
            _ => match effect_algebra_of(doc)? {
                None => return Err(schema(doc, "no state space for this kind")),
                Some(Err(msg)) => {
                    status = 1;
                    m.insert("error".into(), json!(msg));
                }
                Some(Ok((labels, ea))) => {
                    let system = ea_state_system(&ea);
                    m.insert(
                        "constraints".into(),
                        system_summary(&system, labels.names()),
                    );
                    match system.vertices().map_err(|e| schema(doc, e))? {
                        Vertices::Found { dimension, points } => {
                            m.insert("states".into(), json!("nonempty"));
                            m.insert("dimension".into(), json!(dimension));
                            m.insert("vertex_count".into(), json!(points.len()));
                            if extremal {
                                let vs: Vec<Value> = points
                                    .iter()
                                    .map(|p| {
                                        let o: Map<String, Value> = labels
                                            .names()
                                            .iter()
                                            .zip(p)
                                            .map(|(l, x)| (l.clone(), json!(x.to_string())))
                                            .collect();
                                        Value::Object(o)
                                    })
                                    .collect();
                                m.insert("vertices".into(), Value::Array(vs));
                            }
                        }
                        Vertices::Empty(c) => {
                            m.insert("states".into(), json!("no states"));
                            m.insert("certificate".into(), certificate(&c, &system));
                        }
                    }
                }
            },
        }
        results.push(Value::Object(m));
    }
    Ok(Report {
        body: json!({"command": "states", "documents": results}),
        status,
    })
}

/// Pairs of positive named elements, for the min-rule.
fn positive_pairs(fs: &[(String, FnElement)]) -> Vec<(FnElement, FnElement)> {
    let pos: Vec<&FnElement> = fs
        .iter()
        .map(|(_, f)| f)
        .filter(|f| synaptic::is_positive(*f))
        .collect();
    let mut out = Vec::new();
    for a in &pos {
        for b in &pos {
            out.push(((*a).clone(), (*b).clone()));
        }
    }
    out
}

fn commutative_states(
    m: &mut Map<String, Value>,
    points: &[String],
    extremal: bool,
    named: &[(String, FnElement)],
    render: impl Fn(&[f64]) -> Value,
) -> Result<(), LoadError> {
    let system = simplex_system(points.len());
    m.insert("points".into(), json!(points));
    m.insert("constraints".into(), system_summary(&system, points));
    let vertices = system.vertices().map_err(|e| LoadError::Schema {
        document: "simplex".into(),
        message: e.to_string(),
    })?;
    let Vertices::Found {
        dimension,
        points: vs,
    } = vertices
    else {
        unreachable!("the simplex is nonempty")
    };
    m.insert("states".into(), json!("nonempty"));
    m.insert("dimension".into(), json!(dimension));
    m.insert("vertex_count".into(), json!(vs.len()));
    if extremal {
        let pairs = positive_pairs(named);
        let mut out = Vec::new();
        for v in &vs {
            let mu: Vec<f64> = v.iter().map(polytope::to_f64).collect();
            let f = extremal_commutative_characterization(&mu, &pairs).map_err(|e| {
                LoadError::Schema {
                    document: "simplex".into(),
                    message: e.to_string(),
                }
            })?;
            out.push(json!({"state": render(&mu), "flags": flags(&f, points)}));
        }
        m.insert("vertices".into(), Value::Array(out));
    }
    Ok(())
}

/// Default report tolerance, overridable by `SYNAPTICA_TOL`.
pub fn report_tolerance(var: Option<&str>) -> Result<f64, String> {
    match var {
        None => Ok(tol::REPORT),
        Some(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
            _ => Err(format!(
                "SYNAPTICA_TOL must be a positive number, got {s:?}"
            )),
        },
    }
}
