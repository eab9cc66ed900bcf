//! Implementations of the CLI subcommands. Every command returns either a
//! JSON document (exit 0), a failed-check document carrying a
//! counterexample (exit 1), or a usage diagnostic (exit 2). Identical
//! inputs always produce byte-identical output.

use rand::SeedableRng;
use serde_json::{json, Value};

use staraut::chu;
use staraut::cohomology::{self, AbelianCocycle3};
use staraut::groups::FinAbGroup;
use staraut::gvect;
use staraut::prof::{
    self, check_adjunction, FinCategory, FinFunctor, SetProfunctor,
};
use staraut::qforms::{self, QuadraticForm, WeakQuadraticForm};
use staraut::ribbon;
use staraut::CheckResult;

use crate::json as fmt;

/// Enumeration bounds, overridable through `STARAUT_MAX_GROUP_ORDER`.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub aut: i64,
    pub forms: i64,
}

impl Bounds {
    pub fn from_env() -> Result<Self, CommandError> {
        let default = Bounds { aut: 64, forms: 16 };
        match std::env::var("STARAUT_MAX_GROUP_ORDER") {
            Ok(raw) => {
                let v: i64 = raw.parse().map_err(|_| {
                    CommandError::Usage(String::from(
                        "STARAUT_MAX_GROUP_ORDER must be a positive integer",
                    ))
                })?;
                if v < 1 {
                    return Err(CommandError::Usage(String::from(
                        "STARAUT_MAX_GROUP_ORDER must be a positive integer",
                    )));
                }
                Ok(Bounds { aut: v, forms: v })
            }
            Err(_) => Ok(default),
        }
    }
}

#[derive(Debug)]
pub enum CommandError {
    /// Malformed input, IO failure or exceeded bound: exit code 2.
    Usage(String),
    /// A mathematical check failed; the payload carries the report and a
    /// counterexample: exit code 1.
    CheckFailed(Value),
}

pub type CommandResult = Result<Value, CommandError>;

fn usage<T>(msg: impl Into<String>) -> Result<T, CommandError> {
    Err(CommandError::Usage(msg.into()))
}

/// Loads an argument that is either inline JSON or `@path` to a JSON file.
pub fn load_value(arg: &str) -> Result<Value, CommandError> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path)
            .map_err(|e| CommandError::Usage(format!("cannot read '{path}': {e}")))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| CommandError::Usage(format!("malformed JSON: {e}")))
}

fn parse<T>(r: Result<T, String>) -> Result<T, CommandError> {
    r.map_err(CommandError::Usage)
}

fn first_bilinearity_failure(q: &WeakQuadraticForm) -> Option<Value> {
    let group = q.group();
    let elements = group.all_elements();
    for a in &elements {
        for b in &elements {
            let ab = group.add(a, b);
            for c in &elements {
                if q.beta(&ab, c) != q.beta(a, c).mul(&q.beta(b, c)) {
                    return Some(json!({
                        "g1": fmt::element_to_json(a),
                        "g2": fmt::element_to_json(b),
                        "g3": fmt::element_to_json(c),
                    }));
                }
            }
        }
    }
    None
}

// ------------------------------------------------------------------- qf

pub fn qf_enumerate(group_arg: &str, bounds: Bounds) -> CommandResult {
    let group = parse(fmt::group_from_json(&load_value(group_arg)?))?;
    let forms = match qforms::enumerate_wqf_bounded(&group, bounds.forms) {
        Ok(f) => f,
        Err(e) => return usage(format!("{e}")),
    };
    Ok(json!({
        "count": forms.len(),
        "forms": forms.iter().map(fmt::form_to_json).collect::<Vec<_>>(),
    }))
}

pub fn qf_decompose(form_arg: &str) -> CommandResult {
    let q = parse(fmt::form_from_json(&load_value(form_arg)?))?;
    match qforms::decompose(&q) {
        Ok((qt, eta)) => Ok(json!({
            "qtilde": fmt::form_to_json(qt.weak()),
            "eta": fmt::character_to_json(&eta),
        })),
        Err(e) => Err(CommandError::CheckFailed(json!({
            "error": format!("{e}"),
            "counterexample": first_bilinearity_failure(&q),
        }))),
    }
}

pub fn qf_classify(group_arg: &str, bounds: Bounds) -> CommandResult {
    let group = parse(fmt::group_from_json(&load_value(group_arg)?))?;
    let forms = match qforms::enumerate_wqf_bounded(&group, bounds.forms) {
        Ok(f) => f,
        Err(e) => return usage(format!("{e}")),
    };
    match qforms::classify_bounded(&forms, bounds.aut) {
        Ok(orbits) => Ok(fmt::orbits_to_json(&orbits)),
        Err(e) => usage(format!("{e}")),
    }
}

pub fn qf_check(form_arg: &str, symmetric_wrt: Option<&str>) -> CommandResult {
    let q = parse(fmt::form_from_json(&load_value(form_arg)?))?;
    let weak = q.is_weak_qform();
    let qform = weak && q.is_qform();
    let mut out = serde_json::Map::new();
    out.insert("weak_qform".into(), Value::Bool(weak));
    out.insert("qform".into(), Value::Bool(qform));
    let mut pass = weak && qform;
    if let Some(arg) = symmetric_wrt {
        let g0 = parse(fmt::element_from_json(q.group(), &load_value(arg)?))?;
        let sym = q.is_symmetric_wrt(&g0);
        out.insert("symmetric_wrt".into(), Value::Bool(sym));
        pass = pass && sym;
    }
    if !weak {
        out.insert(
            "counterexample".into(),
            first_bilinearity_failure(&q).unwrap_or(Value::Null),
        );
    } else if !qform {
        let witness = q
            .group()
            .all_elements()
            .into_iter()
            .find(|g| q.value(g) != q.value(&q.group().neg(g)));
        if let Some(g) = witness {
            out.insert("counterexample".into(), json!({ "g": fmt::element_to_json(&g) }));
        }
    }
    let value = Value::Object(out);
    if pass {
        Ok(value)
    } else {
        Err(CommandError::CheckFailed(value))
    }
}

// -------------------------------------------------------------- cocycle

pub fn cocycle_check(group_arg: &str, cocycle_arg: &str) -> CommandResult {
    let group = parse(fmt::group_from_json(&load_value(group_arg)?))?;
    let (psi, omega) = parse(fmt::cochain_pair_from_json(&group, &load_value(cocycle_arg)?))?;
    let closed = psi.is_closed();
    let hexagons = ribbon::check_hexagons(&psi, &omega);
    let is_cocycle = closed && hexagons;
    let mut out = json!({
        "cocycle": is_cocycle,
        "closed": closed,
        "hexagons": hexagons,
    });
    if is_cocycle {
        let c = AbelianCocycle3::new(psi, omega).expect("checked above");
        if let Ok(q) = cohomology::em_qform(&c) {
            out["em_qform"] = fmt::form_to_json(q.weak());
        }
        Ok(out)
    } else {
        Err(CommandError::CheckFailed(out))
    }
}

pub fn cocycle_from_qform(form_arg: &str) -> CommandResult {
    let weak = parse(fmt::form_from_json(&load_value(form_arg)?))?;
    let q = match QuadraticForm::new(weak.clone()) {
        Ok(q) => q,
        Err(e) => {
            return Err(CommandError::CheckFailed(json!({
                "error": format!("{e}"),
                "counterexample": first_bilinearity_failure(&weak),
            })))
        }
    };
    match cohomology::cocycle_from_qform(&q) {
        Ok(c) => Ok(fmt::cocycle_to_json(&c)),
        Err(e) => Err(CommandError::CheckFailed(json!({ "error": format!("{e}") }))),
    }
}

// --------------------------------------------------------------- ribbon

fn coherence_json(r: &ribbon::CoherenceReport) -> Value {
    json!({
        "pentagon": r.pentagon,
        "triangle": r.triangle,
        "hexagons": r.hexagons,
        "twist": r.twist,
        "ribbon": r.ribbon,
        "all": r.all_pass(),
    })
}

pub fn ribbon_build(datum_arg: &str) -> CommandResult {
    let datum = match fmt::wrqf_from_json(&load_value(datum_arg)?) {
        Ok(d) => d,
        Err(e) if e.starts_with("datum:") || e.starts_with("field 'q'") => {
            return Err(CommandError::CheckFailed(json!({ "error": e })))
        }
        Err(e) => return usage(e),
    };
    match ribbon::build_from_wrqf(&datum) {
        Ok(s) => Ok(json!({
            "structure": fmt::structure_to_json(&s),
            "checks": coherence_json(&s.check_all()),
        })),
        Err(e) => Err(CommandError::CheckFailed(json!({ "error": format!("{e}") }))),
    }
}

pub fn ribbon_check(group_arg: &str, structure_arg: &str) -> CommandResult {
    let group = parse(fmt::group_from_json(&load_value(group_arg)?))?;
    let s = parse(fmt::structure_from_json(&group, &load_value(structure_arg)?))?;
    let report = s.check_all();
    let value = coherence_json(&report);
    if report.all_pass() {
        Ok(value)
    } else {
        Err(CommandError::CheckFailed(value))
    }
}

pub fn ribbon_enumerate(group_arg: &str, bounds: Bounds) -> CommandResult {
    let group = parse(fmt::group_from_json(&load_value(group_arg)?))?;
    match ribbon::enumerate_structures_bounded(&group, bounds.forms) {
        Ok(structures) => Ok(json!({
            "count": structures.len(),
            "structures": structures.iter().map(fmt::structure_to_json).collect::<Vec<_>>(),
        })),
        Err(ribbon::RibbonError::QForm(e)) => usage(format!("{e}")),
        Err(e) => Err(CommandError::CheckFailed(json!({ "error": format!("{e}") }))),
    }
}

pub fn ribbon_equivalent(group_arg: &str, first_arg: &str, second_arg: &str) -> CommandResult {
    let group = parse(fmt::group_from_json(&load_value(group_arg)?))?;
    let s1 = parse(fmt::structure_from_json(&group, &load_value(first_arg)?))?;
    let s2 = parse(fmt::structure_from_json(&group, &load_value(second_arg)?))?;
    match ribbon::equivalent_structures(&s1, &s2) {
        Ok(Some((f, kappa))) => Ok(json!({
            "equivalent": true,
            "witness": {
                "automorphism": f.images().iter().map(fmt::element_to_json).collect::<Vec<_>>(),
                "kappa": fmt::cochain2_to_json(&group, &kappa),
            },
        })),
        Ok(None) => Ok(json!({ "equivalent": false })),
        Err(e) => usage(format!("{e}")),
    }
}

// ---------------------------------------------------------------- gvect

pub fn gvect_verify(group_arg: &str, seed: u64, max_dim: usize, samples: usize) -> CommandResult {
    let group = parse(fmt::group_from_json(&load_value(group_arg)?))?;
    let checks = gvect::verify_identities(&group, seed, max_dim, samples)
        .map_err(|e| CommandError::Usage(format!("{e}")))?;
    let value = fmt::checks_to_json(&checks);
    if checks.iter().all(|c| c.pass) {
        Ok(value)
    } else {
        Err(CommandError::CheckFailed(value))
    }
}

// ------------------------------------------------------------------ chu

pub fn chu_verify(seed: u64, max_dim: usize, count: usize) -> CommandResult {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<chu::ChuPair> =
        (0..count.max(3)).map(|_| chu::random_valid_pair(&mut rng, max_dim)).collect();
    let mut aggregate: Vec<CheckResult> = Vec::new();
    for i in 0..count {
        let u = &pairs[i % pairs.len()];
        let v = &pairs[(i + 1) % pairs.len()];
        let w = &pairs[(i + 2) % pairs.len()];
        let checks = chu::verify_identities(u, v, w, &mut rng)
            .map_err(|e| CommandError::Usage(format!("{e}")))?;
        for c in checks {
            match aggregate.iter_mut().find(|a| a.name == c.name) {
                Some(slot) => {
                    if !c.pass {
                        slot.pass = false;
                        slot.detail = c.detail.clone().or_else(|| Some(format!("triple {i}")));
                    }
                }
                None => aggregate.push(c),
            }
        }
    }
    let value = fmt::checks_to_json(&aggregate);
    if aggregate.iter().all(|c| c.pass) {
        Ok(value)
    } else {
        Err(CommandError::CheckFailed(value))
    }
}

// ----------------------------------------------------------------- prof

fn builtin_category(name: &str) -> Option<FinCategory> {
    match name {
        "z2" => Some(FinCategory::one_object_group(&FinAbGroup::cyclic(2))),
        "z3" => Some(FinCategory::one_object_group(&FinAbGroup::cyclic(3))),
        "poset3" => Some(FinCategory::poset_chain(3)),
        "endo3" => Some(FinCategory::three_object_endo()),
        "discrete2" => Some(FinCategory::discrete(2)),
        _ => None,
    }
}

pub fn prof_demo(category_arg: &str) -> CommandResult {
    let cat = if let Some(cat) = builtin_category(category_arg) {
        cat
    } else {
        parse(fmt::category_from_json(&load_value(category_arg)?))?
    };
    let idp = SetProfunctor::identity_prof(&cat);
    let id_fun = FinFunctor::identity(&cat);

    let mut checks = Vec::new();
    let collapse = prof::identity_collapse_check(&idp)
        .map_err(|e| CommandError::Usage(format!("{e}")))?;
    checks.push(CheckResult { name: "hom_coend_collapse", pass: collapse, detail: None });

    let order = prof::coend_order_independent(&idp)
        .map_err(|e| CommandError::Usage(format!("{e}")))?;
    checks.push(CheckResult { name: "coend_order_independent", pass: order, detail: None });

    let assoc = prof::associativity_check(&idp, &idp, &idp)
        .map_err(|e| CommandError::Usage(format!("{e}")))?;
    checks.push(CheckResult { name: "composition_associative", pass: assoc, detail: None });

    let brute = prof::natural_transformations_brute(&cat, &cat, &id_fun, &id_fun).len();
    let via_end = prof::nat_count_via_end(&cat, &cat, &id_fun, &id_fun)
        .map_err(|e| CommandError::Usage(format!("{e}")))?;
    checks.push(CheckResult {
        name: "nat_count_end_vs_brute",
        pass: brute == via_end,
        detail: Some(format!("end: {via_end}, brute: {brute}")),
    });

    let report = check_adjunction(&cat, &cat, &id_fun)
        .map_err(|e| CommandError::Usage(format!("{e}")))?;
    checks.push(CheckResult {
        name: "representable_adjunction",
        pass: report.all_pass(),
        detail: if report.failures.is_empty() {
            None
        } else {
            Some(report.failures.join("; "))
        },
    });

    let mut value = fmt::checks_to_json(&checks);
    value["category"] = fmt::category_to_json(&cat);
    value["nat_count"] = json!(via_end);
    if checks.iter().all(|c| c.pass) {
        Ok(value)
    } else {
        Err(CommandError::CheckFailed(value))
    }
}
