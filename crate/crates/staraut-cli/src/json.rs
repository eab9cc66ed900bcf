//! JSON codecs for every library type that crosses the CLI boundary.
//!
//! Encoders produce `serde_json::Value`s whose object keys serialize in
//! sorted order, so identical inputs yield byte-identical output. Decoders
//! return error strings that name the offending field.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Map, Value};

use staraut::chu::ChuPair;
use staraut::cohomology::{AbelianCocycle3, Cochain2, Cochain3};
use staraut::groups::{Character, FinAbGroup, GroupElement};
use staraut::gvect::{GradedMap, GradedSpace};
use staraut::prof::FinCategory;
use staraut::qforms::{Orbit, QuadraticForm, WeakQuadraticForm, WrqfDatum};
use staraut::ribbon::SkeletalStructure;
use staraut::{CheckResult, RationalMatrix, RootOfUnity};

pub type ParseResult<T> = Result<T, String>;

fn field<'v>(v: &'v Value, name: &str) -> ParseResult<&'v Value> {
    v.get(name).ok_or_else(|| format!("missing field '{name}'"))
}

fn as_i64(v: &Value, name: &str) -> ParseResult<i64> {
    v.as_i64().ok_or_else(|| format!("field '{name}' must be an integer"))
}

fn as_array<'v>(v: &'v Value, name: &str) -> ParseResult<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| format!("field '{name}' must be an array"))
}

fn as_str<'v>(v: &'v Value, name: &str) -> ParseResult<&'v str> {
    v.as_str().ok_or_else(|| format!("field '{name}' must be a string"))
}

// -------------------------------------------------------------- scalars

pub fn root_to_json(x: &RootOfUnity) -> Value {
    json!({ "num": x.num(), "den": x.den() })
}

pub fn root_from_json(v: &Value) -> ParseResult<RootOfUnity> {
    let num = as_i64(field(v, "num")?, "num")?;
    let den = as_i64(field(v, "den")?, "den")?;
    if den < 1 {
        return Err(String::from("field 'den' must be a positive integer"));
    }
    Ok(RootOfUnity::new(num, den))
}

pub fn rational_to_string(r: &BigRational) -> String {
    let (mut num, mut den) = (r.numer().clone(), r.denom().clone());
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    format!("{num}/{den}")
}

pub fn rational_from_string(s: &str) -> ParseResult<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| format!("bad rational '{s}'"))?;
    let den = BigInt::from_str(den.trim()).map_err(|_| format!("bad rational '{s}'"))?;
    if den == BigInt::from(0) {
        return Err(format!("bad rational '{s}': zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

pub fn matrix_to_json(m: &RationalMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                (0..m.cols()).map(|j| Value::String(rational_to_string(m.get(i, j)))).collect(),
            )
        })
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

pub fn matrix_from_json(v: &Value) -> ParseResult<RationalMatrix> {
    let rows = as_i64(field(v, "rows")?, "rows")? as usize;
    let cols = as_i64(field(v, "cols")?, "cols")? as usize;
    let entries = as_array(field(v, "entries")?, "entries")?;
    if entries.len() != rows {
        return Err(format!("field 'entries' must have {rows} rows"));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for row in entries {
        let row = as_array(row, "entries")?;
        if row.len() != cols {
            return Err(format!("field 'entries' must have {cols} columns per row"));
        }
        for cell in row {
            flat.push(rational_from_string(as_str(cell, "entries")?)?);
        }
    }
    RationalMatrix::new(rows, cols, flat).map_err(|e| format!("field 'entries': {e}"))
}

// ------------------------------------------------------ groups, elements

pub fn group_to_json(g: &FinAbGroup) -> Value {
    json!({ "cyclic_orders": g.cyclic_orders() })
}

pub fn group_from_json(v: &Value) -> ParseResult<FinAbGroup> {
    let orders = as_array(field(v, "cyclic_orders")?, "cyclic_orders")?;
    let orders: ParseResult<Vec<i64>> =
        orders.iter().map(|o| as_i64(o, "cyclic_orders")).collect();
    FinAbGroup::new(orders?).map_err(|e| format!("field 'cyclic_orders': {e}"))
}

pub fn element_to_json(e: &GroupElement) -> Value {
    Value::Array(e.residues().iter().map(|&k| Value::from(k)).collect())
}

pub fn element_from_json(group: &FinAbGroup, v: &Value) -> ParseResult<GroupElement> {
    let residues = as_array(v, "element")?;
    let residues: ParseResult<Vec<i64>> = residues.iter().map(|r| as_i64(r, "element")).collect();
    group.element(&residues?).map_err(|e| format!("element: {e}"))
}

pub fn character_to_json(c: &Character) -> Value {
    json!({ "images": c.images().iter().map(root_to_json).collect::<Vec<_>>() })
}

pub fn character_from_json(group: &FinAbGroup, v: &Value) -> ParseResult<Character> {
    let images = as_array(field(v, "images")?, "images")?;
    let images: ParseResult<Vec<RootOfUnity>> = images.iter().map(root_from_json).collect();
    Character::new(group, images?).map_err(|e| format!("field 'images': {e}"))
}

// ----------------------------------------------------------------- forms

pub fn form_to_json(q: &WeakQuadraticForm) -> Value {
    let group = q.group();
    let values: Vec<Value> = group
        .all_elements()
        .iter()
        .map(|g| Value::Array(vec![element_to_json(g), root_to_json(&q.value(g))]))
        .collect();
    json!({ "group": group_to_json(group), "values": values })
}

pub fn form_from_json(v: &Value) -> ParseResult<WeakQuadraticForm> {
    let group = group_from_json(field(v, "group")?)?;
    let pairs = as_array(field(v, "values")?, "values")?;
    if pairs.len() != group.order() as usize {
        return Err(format!(
            "field 'values' must list all {} elements exactly once",
            group.order()
        ));
    }
    let mut table = vec![None; group.order() as usize];
    for pair in pairs {
        let pair = as_array(pair, "values")?;
        if pair.len() != 2 {
            return Err(String::from("field 'values' entries must be [element, root] pairs"));
        }
        let elem = element_from_json(&group, &pair[0])?;
        let root = root_from_json(&pair[1])?;
        let idx = group.index_of(&elem);
        if table[idx].replace(root).is_some() {
            return Err(format!("field 'values' lists element {:?} twice", elem.residues()));
        }
    }
    let values: Vec<RootOfUnity> = table.into_iter().map(|v| v.unwrap()).collect();
    WeakQuadraticForm::new(group, values).map_err(|e| format!("field 'values': {e}"))
}

pub fn orbits_to_json(orbits: &[Orbit]) -> Value {
    json!({
        "orbits": orbits
            .iter()
            .map(|o| json!({ "representative": form_to_json(&o.representative), "size": o.size() }))
            .collect::<Vec<_>>()
    })
}

pub fn wrqf_to_json(d: &WrqfDatum) -> Value {
    json!({
        "q": form_to_json(d.q().weak()),
        "eta": character_to_json(d.eta()),
        "g0": element_to_json(d.g0()),
    })
}

pub fn wrqf_from_json(v: &Value) -> ParseResult<WrqfDatum> {
    let q_weak = form_from_json(field(v, "q")?)?;
    let group = q_weak.group().clone();
    let q = QuadraticForm::new(q_weak).map_err(|e| format!("field 'q': {e}"))?;
    let eta = character_from_json(&group, field(v, "eta")?)?;
    let g0 = element_from_json(&group, field(v, "g0")?)?;
    WrqfDatum::new(q, eta, g0).map_err(|e| format!("datum: {e}"))
}

// ------------------------------------------------------------- cocycles

fn table2_to_json(group: &FinAbGroup, value: impl Fn(&GroupElement, &GroupElement) -> RootOfUnity) -> Value {
    let mut rows = Vec::new();
    for a in group.all_elements() {
        for b in group.all_elements() {
            rows.push(Value::Array(vec![
                element_to_json(&a),
                element_to_json(&b),
                root_to_json(&value(&a, &b)),
            ]));
        }
    }
    Value::Array(rows)
}

fn table3_to_json(
    group: &FinAbGroup,
    value: impl Fn(&GroupElement, &GroupElement, &GroupElement) -> RootOfUnity,
) -> Value {
    let mut rows = Vec::new();
    for a in group.all_elements() {
        for b in group.all_elements() {
            for c in group.all_elements() {
                rows.push(Value::Array(vec![
                    element_to_json(&a),
                    element_to_json(&b),
                    element_to_json(&c),
                    root_to_json(&value(&a, &b, &c)),
                ]));
            }
        }
    }
    Value::Array(rows)
}

pub fn cochain2_from_json(group: &FinAbGroup, v: &Value, name: &str) -> ParseResult<Cochain2> {
    let n = group.order() as usize;
    let rows = as_array(v, name)?;
    if rows.len() != n * n {
        return Err(format!("field '{name}' must have {} rows", n * n));
    }
    let mut table = vec![None; n * n];
    for row in rows {
        let row = as_array(row, name)?;
        if row.len() != 3 {
            return Err(format!("field '{name}' entries must be [g1, g2, root]"));
        }
        let a = group.index_of(&element_from_json(group, &row[0])?);
        let b = group.index_of(&element_from_json(group, &row[1])?);
        if table[a * n + b].replace(root_from_json(&row[2])?).is_some() {
            return Err(format!("field '{name}' lists a pair twice"));
        }
    }
    let table: Vec<RootOfUnity> = table.into_iter().map(|v| v.unwrap()).collect();
    Cochain2::new(group.clone(), table).map_err(|e| format!("field '{name}': {e}"))
}

pub fn cochain3_from_json(group: &FinAbGroup, v: &Value, name: &str) -> ParseResult<Cochain3> {
    let n = group.order() as usize;
    let rows = as_array(v, name)?;
    if rows.len() != n * n * n {
        return Err(format!("field '{name}' must have {} rows", n * n * n));
    }
    let mut table = vec![None; n * n * n];
    for row in rows {
        let row = as_array(row, name)?;
        if row.len() != 4 {
            return Err(format!("field '{name}' entries must be [g1, g2, g3, root]"));
        }
        let a = group.index_of(&element_from_json(group, &row[0])?);
        let b = group.index_of(&element_from_json(group, &row[1])?);
        let c = group.index_of(&element_from_json(group, &row[2])?);
        if table[(a * n + b) * n + c].replace(root_from_json(&row[3])?).is_some() {
            return Err(format!("field '{name}' lists a triple twice"));
        }
    }
    let table: Vec<RootOfUnity> = table.into_iter().map(|v| v.unwrap()).collect();
    Cochain3::new(group.clone(), table).map_err(|e| format!("field '{name}': {e}"))
}

pub fn cocycle_to_json(c: &AbelianCocycle3) -> Value {
    let group = c.group();
    json!({
        "psi": table3_to_json(group, |a, b, g| c.psi().value([a, b, g])),
        "omega": table2_to_json(group, |a, b| c.omega().value([a, b])),
    })
}

pub fn cochain_pair_from_json(group: &FinAbGroup, v: &Value) -> ParseResult<(Cochain3, Cochain2)> {
    let psi = cochain3_from_json(group, field(v, "psi")?, "psi")?;
    let omega = cochain2_from_json(group, field(v, "omega")?, "omega")?;
    Ok((psi, omega))
}

pub fn cochain2_to_json(group: &FinAbGroup, kappa: &Cochain2) -> Value {
    table2_to_json(group, |a, b| kappa.value([a, b]))
}

// ------------------------------------------------------------ structures

pub fn structure_to_json(s: &SkeletalStructure) -> Value {
    let group = s.group();
    let theta: Vec<Value> = group
        .all_elements()
        .iter()
        .map(|g| Value::Array(vec![element_to_json(g), root_to_json(&s.theta_at(g))]))
        .collect();
    json!({
        "psi": table3_to_json(group, |a, b, c| s.psi().value([a, b, c])),
        "omega": table2_to_json(group, |a, b| s.omega().value([a, b])),
        "theta": theta,
        "g0": element_to_json(s.g0()),
    })
}

pub fn structure_from_json(group: &FinAbGroup, v: &Value) -> ParseResult<SkeletalStructure> {
    let (psi, omega) = cochain_pair_from_json(group, v)?;
    let theta_rows = as_array(field(v, "theta")?, "theta")?;
    let n = group.order() as usize;
    if theta_rows.len() != n {
        return Err(format!("field 'theta' must have {n} rows"));
    }
    let mut theta = vec![None; n];
    for row in theta_rows {
        let row = as_array(row, "theta")?;
        if row.len() != 2 {
            return Err(String::from("field 'theta' entries must be [element, root]"));
        }
        let idx = group.index_of(&element_from_json(group, &row[0])?);
        if theta[idx].replace(root_from_json(&row[1])?).is_some() {
            return Err(String::from("field 'theta' lists an element twice"));
        }
    }
    let theta: Vec<RootOfUnity> = theta.into_iter().map(|v| v.unwrap()).collect();
    let g0 = element_from_json(group, field(v, "g0")?)?;
    SkeletalStructure::new(psi, omega, theta, g0).map_err(|e| format!("structure: {e}"))
}

// --------------------------------------------------------- graded spaces

pub fn space_to_json(s: &GradedSpace) -> Value {
    let group = s.group();
    let dims: Vec<Value> = group
        .all_elements()
        .iter()
        .map(|g| Value::Array(vec![element_to_json(g), Value::from(s.dim_at(g) as i64)]))
        .collect();
    json!({ "group": group_to_json(group), "dims": dims })
}

pub fn space_from_json(v: &Value) -> ParseResult<GradedSpace> {
    let group = group_from_json(field(v, "group")?)?;
    let rows = as_array(field(v, "dims")?, "dims")?;
    let n = group.order() as usize;
    if rows.len() != n {
        return Err(format!("field 'dims' must have {n} rows"));
    }
    let mut dims = vec![None; n];
    for row in rows {
        let row = as_array(row, "dims")?;
        if row.len() != 2 {
            return Err(String::from("field 'dims' entries must be [element, dim]"));
        }
        let idx = group.index_of(&element_from_json(&group, &row[0])?);
        let d = as_i64(&row[1], "dims")?;
        if d < 0 {
            return Err(String::from("field 'dims' entries must be nonnegative"));
        }
        if dims[idx].replace(d as usize).is_some() {
            return Err(String::from("field 'dims' lists an element twice"));
        }
    }
    let dims: Vec<usize> = dims.into_iter().map(|v| v.unwrap()).collect();
    GradedSpace::new(group, dims).map_err(|e| format!("field 'dims': {e}"))
}

pub fn graded_map_to_json(f: &GradedMap) -> Value {
    let group = f.source().group();
    let blocks: Vec<Value> = group
        .all_elements()
        .iter()
        .enumerate()
        .map(|(idx, g)| Value::Array(vec![element_to_json(g), matrix_to_json(f.block(idx))]))
        .collect();
    json!({ "degree": element_to_json(f.degree()), "blocks": blocks })
}

pub fn graded_map_from_json(
    source: &GradedSpace,
    target: &GradedSpace,
    v: &Value,
) -> ParseResult<GradedMap> {
    let group = source.group().clone();
    let degree = element_from_json(&group, field(v, "degree")?)?;
    let rows = as_array(field(v, "blocks")?, "blocks")?;
    let n = group.order() as usize;
    if rows.len() != n {
        return Err(format!("field 'blocks' must have {n} rows"));
    }
    let mut blocks = vec![None; n];
    for row in rows {
        let row = as_array(row, "blocks")?;
        if row.len() != 2 {
            return Err(String::from("field 'blocks' entries must be [element, matrix]"));
        }
        let idx = group.index_of(&element_from_json(&group, &row[0])?);
        if blocks[idx].replace(matrix_from_json(&row[1])?).is_some() {
            return Err(String::from("field 'blocks' lists an element twice"));
        }
    }
    let blocks: Vec<RationalMatrix> = blocks.into_iter().map(|v| v.unwrap()).collect();
    GradedMap::new(source.clone(), target.clone(), degree, blocks)
        .map_err(|e| format!("field 'blocks': {e}"))
}

// -------------------------------------------------------------- chu pairs

pub fn chu_to_json(p: &ChuPair) -> Value {
    json!({ "dimV": p.dim_v(), "dimW": p.dim_w(), "pairing": matrix_to_json(p.pairing()) })
}

pub fn chu_from_json(v: &Value) -> ParseResult<ChuPair> {
    let dim_v = as_i64(field(v, "dimV")?, "dimV")? as usize;
    let dim_w = as_i64(field(v, "dimW")?, "dimW")? as usize;
    let pairing = matrix_from_json(field(v, "pairing")?)?;
    if pairing.rows() != dim_v || pairing.cols() != dim_w {
        return Err(String::from("field 'pairing' shape must be dimV x dimW"));
    }
    Ok(ChuPair::new(pairing))
}

// -------------------------------------------------------------- categories

pub fn category_from_json(v: &Value) -> ParseResult<FinCategory> {
    let objects = as_array(field(v, "objects")?, "objects")?;
    let objects: ParseResult<Vec<String>> =
        objects.iter().map(|o| as_str(o, "objects").map(String::from)).collect();
    let objects = objects?;
    let n = objects.len();
    let obj_index = |label: &str| -> ParseResult<usize> {
        objects
            .iter()
            .position(|o| o == label)
            .ok_or_else(|| format!("unknown object '{label}'"))
    };

    let homs_json = field(v, "homs")?
        .as_object()
        .ok_or_else(|| String::from("field 'homs' must be an object"))?;
    let mut homs = vec![vec![Vec::<String>::new(); n]; n];
    for (key, labels) in homs_json {
        let (a, b) = parse_pair_key(key, &obj_index)?;
        let labels = as_array(labels, "homs")?;
        homs[a][b] = labels
            .iter()
            .map(|l| as_str(l, "homs").map(String::from))
            .collect::<ParseResult<Vec<_>>>()?;
    }

    let ids_json = field(v, "ids")?
        .as_object()
        .ok_or_else(|| String::from("field 'ids' must be an object"))?;
    let mut ids = vec![usize::MAX; n];
    for (key, label) in ids_json {
        let a = obj_index(key)?;
        let label = as_str(label, "ids")?;
        ids[a] = homs[a][a]
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| format!("field 'ids': unknown morphism '{label}'"))?;
    }
    if ids.iter().any(|&i| i == usize::MAX) {
        return Err(String::from("field 'ids' must select an identity for every object"));
    }

    let comp_json = field(v, "comp")?
        .as_object()
        .ok_or_else(|| String::from("field 'comp' must be an object"))?;
    let mut comp = vec![vec![vec![Vec::<Vec<usize>>::new(); n]; n]; n];
    #[allow(clippy::needless_range_loop)]
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                comp[a][b][c] = vec![vec![0usize; homs[b][c].len()]; homs[a][b].len()];
            }
        }
    }
    for (key, table) in comp_json {
        let (a, b, c) = parse_triple_key(key, &obj_index)?;
        let rows = as_array(table, "comp")?;
        if rows.len() != homs[a][b].len() {
            return Err(format!("field 'comp' table for {key} has the wrong number of rows"));
        }
        for (f, row) in rows.iter().enumerate() {
            let row = as_array(row, "comp")?;
            if row.len() != homs[b][c].len() {
                return Err(format!("field 'comp' table for {key} has the wrong row length"));
            }
            for (g, label) in row.iter().enumerate() {
                let label = as_str(label, "comp")?;
                comp[a][b][c][f][g] = homs[a][c]
                    .iter()
                    .position(|l| l == label)
                    .ok_or_else(|| format!("field 'comp': unknown morphism '{label}'"))?;
            }
        }
    }
    // Nonempty composable slots must have been given.
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !homs[a][b].is_empty()
                    && !homs[b][c].is_empty()
                    && !comp_json.contains_key(&format!(
                        "({},{},{})",
                        objects[a], objects[b], objects[c]
                    ))
                {
                    return Err(format!(
                        "field 'comp' is missing the table for ({},{},{})",
                        objects[a], objects[b], objects[c]
                    ));
                }
            }
        }
    }
    FinCategory::new(objects, homs, ids, comp).map_err(|e| format!("category: {e}"))
}

pub fn category_to_json(cat: &FinCategory) -> Value {
    let n = cat.object_count();
    let objects: Vec<Value> =
        (0..n).map(|a| Value::String(cat.object_label(a).to_string())).collect();
    let mut homs = Map::new();
    let mut comp = Map::new();
    let mut ids = Map::new();
    for a in 0..n {
        ids.insert(
            cat.object_label(a).to_string(),
            Value::String(cat.mor_label(cat.id(a)).to_string()),
        );
        for b in 0..n {
            if !cat.hom(a, b).is_empty() {
                homs.insert(
                    format!("({},{})", cat.object_label(a), cat.object_label(b)),
                    Value::Array(
                        cat.hom(a, b).iter().map(|l| Value::String(l.clone())).collect(),
                    ),
                );
            }
            for c in 0..n {
                if cat.hom(a, b).is_empty() || cat.hom(b, c).is_empty() {
                    continue;
                }
                let mut rows = Vec::new();
                for f in 0..cat.hom(a, b).len() {
                    let mut row = Vec::new();
                    for g in 0..cat.hom(b, c).len() {
                        let m = cat.compose(
                            staraut::prof::Mor { src: a, tgt: b, idx: f },
                            staraut::prof::Mor { src: b, tgt: c, idx: g },
                        );
                        row.push(Value::String(cat.mor_label(m).to_string()));
                    }
                    rows.push(Value::Array(row));
                }
                comp.insert(
                    format!(
                        "({},{},{})",
                        cat.object_label(a),
                        cat.object_label(b),
                        cat.object_label(c)
                    ),
                    Value::Array(rows),
                );
            }
        }
    }
    json!({ "objects": objects, "homs": homs, "comp": comp, "ids": ids })
}

fn parse_pair_key(key: &str, obj_index: &impl Fn(&str) -> ParseResult<usize>) -> ParseResult<(usize, usize)> {
    let inner = key
        .strip_prefix('(')
        .and_then(|k| k.strip_suffix(')'))
        .ok_or_else(|| format!("bad hom key '{key}', expected '(a,b)'"))?;
    let mut parts = inner.splitn(2, ',');
    let a = obj_index(parts.next().unwrap_or("").trim())?;
    let b = obj_index(parts.next().ok_or_else(|| format!("bad hom key '{key}'"))?.trim())?;
    Ok((a, b))
}

fn parse_triple_key(
    key: &str,
    obj_index: &impl Fn(&str) -> ParseResult<usize>,
) -> ParseResult<(usize, usize, usize)> {
    let inner = key
        .strip_prefix('(')
        .and_then(|k| k.strip_suffix(')'))
        .ok_or_else(|| format!("bad comp key '{key}', expected '(a,b,c)'"))?;
    let mut parts = inner.splitn(3, ',');
    let a = obj_index(parts.next().unwrap_or("").trim())?;
    let b = obj_index(parts.next().ok_or_else(|| format!("bad comp key '{key}'"))?.trim())?;
    let c = obj_index(parts.next().ok_or_else(|| format!("bad comp key '{key}'"))?.trim())?;
    Ok((a, b, c))
}

// ---------------------------------------------------------------- reports

pub fn checks_to_json(checks: &[CheckResult]) -> Value {
    let rows: Vec<Value> = checks
        .iter()
        .map(|c| {
            let mut obj = Map::new();
            obj.insert("name".into(), Value::String(c.name.to_string()));
            obj.insert("pass".into(), Value::Bool(c.pass));
            if let Some(d) = &c.detail {
                obj.insert("detail".into(), Value::String(d.clone()));
            }
            Value::Object(obj)
        })
        .collect();
    json!({ "checks": rows, "pass": checks.iter().all(|c| c.pass) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use staraut::qforms::enumerate_wqf;

    #[test]
    fn root_roundtrip() {
        for (a, n) in [(0, 1), (1, 2), (3, 8), (2, 3)] {
            let x = RootOfUnity::new(a, n);
            assert_eq!(root_from_json(&root_to_json(&x)).unwrap(), x);
        }
        assert!(root_from_json(&json!({"num": 1})).unwrap_err().contains("den"));
    }

    #[test]
    fn rational_strings() {
        let r = rational_from_string("-4/6").unwrap();
        assert_eq!(rational_to_string(&r), "-2/3");
        assert_eq!(rational_to_string(&rational_from_string("5").unwrap()), "5/1");
        assert!(rational_from_string("1/0").is_err());
    }

    #[test]
    fn matrix_roundtrip() {
        let m = RationalMatrix::from_i64_rows(&[&[1, -2], &[0, 7]]);
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
    }

    #[test]
    fn form_roundtrip() {
        let g = FinAbGroup::new(vec![2, 3]).unwrap();
        for q in enumerate_wqf(&g).unwrap().iter().take(8) {
            assert_eq!(&form_from_json(&form_to_json(q)).unwrap(), q);
        }
    }

    #[test]
    fn space_and_map_roundtrip() {
        let g = FinAbGroup::cyclic(3);
        let s = GradedSpace::new(g.clone(), vec![1, 2, 0]).unwrap();
        let back = space_from_json(&space_to_json(&s)).unwrap();
        assert_eq!(back, s);
        let id = GradedMap::identity(&s);
        let back = graded_map_from_json(&s, &s, &graded_map_to_json(&id)).unwrap();
        assert_eq!(back, id);
    }

    #[test]
    fn chu_roundtrip() {
        let p = ChuPair::new(RationalMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]));
        assert_eq!(chu_from_json(&chu_to_json(&p)).unwrap(), p);
        assert!(chu_from_json(&json!({"dimV": 2, "dimW": 1, "pairing": matrix_to_json(p.pairing())}))
            .is_err());
    }

    #[test]
    fn category_roundtrip() {
        for cat in [
            FinCategory::one_object_group(&FinAbGroup::cyclic(2)),
            FinCategory::poset_chain(3),
            FinCategory::three_object_endo(),
        ] {
            let back = category_from_json(&category_to_json(&cat)).unwrap();
            assert_eq!(back, cat);
        }
    }

    #[test]
    fn structure_roundtrip() {
        let g = FinAbGroup::cyclic(3);
        for s in staraut::ribbon::enumerate_structures(&g).unwrap().iter().take(4) {
            let back = structure_from_json(&g, &structure_to_json(s)).unwrap();
            assert_eq!(&back, s);
        }
    }
}
