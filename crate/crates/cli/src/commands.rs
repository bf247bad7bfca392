use std::path::Path;

use cliffweyl_core::cartan::{ExtensionSpec, Family, FiniteType};
use cliffweyl_core::exactform::QuadSpace;
use cliffweyl_core::outer::{spinor_table, SpinorTable};
use cliffweyl_core::paravector::{worked_example_a1, worked_example_a2};
use cliffweyl_core::rational;
use cliffweyl_core::vahlen::{enumerate_weyl, Verdict, WeylLimits};
use serde_json::{json, Map, Value};

use crate::formats::{
    read_json, rat_to_string, report_json, vector_json, CliffMat2File, ExtensionFile, IsometryFile, QuadSpaceFile,
};
use crate::{CliError, Outcome};

/// Largest extension rank `n + 2` accepted without `--unsafe-limits`.
pub const EXTENSION_RANK_LIMIT: usize = 10;
pub const MAX_LEN_LIMIT: usize = 10;

/// Base types of the outer-automorphism table.
pub const SPINOR_TABLE_TYPES: [(Family, usize); 14] = [
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::A, 5),
    (Family::A, 6),
    (Family::A, 7),
    (Family::D, 4),
    (Family::D, 5),
    (Family::D, 6),
    (Family::D, 7),
    (Family::D, 8),
    (Family::E, 6),
    (Family::E, 7),
    (Family::E, 8),
];

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn emit(text: String, out: Option<&Path>) -> Result<String, CliError> {
    match out {
        Some(p) => {
            std::fs::write(p, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn parse_type(family: &str, rank: usize, unsafe_limits: bool) -> Result<FiniteType, CliError> {
    let mut chars = family.trim().chars();
    let f = match (chars.next(), chars.next()) {
        (Some(c), None) => Family::from_letter(c.to_ascii_uppercase()),
        _ => None,
    }
    .ok_or_else(|| CliError::Malformed(format!("unknown type {family:?}")))?;
    let t = FiniteType::new(f, rank)?;
    if rank + 2 > EXTENSION_RANK_LIMIT && !unsafe_limits {
        return Err(CliError::Resource(format!(
            "{t}++ has rank {} > {EXTENSION_RANK_LIMIT}; pass --unsafe-limits to proceed",
            rank + 2
        )));
    }
    Ok(t)
}

fn require_simply_laced(t: FiniteType) -> Result<(), CliError> {
    if t.is_simply_laced() {
        Ok(())
    } else {
        Err(CliError::Unsupported(format!("{t} is not simply laced")))
    }
}

pub fn extend(t: FiniteType, out: Option<&Path>) -> Result<Outcome, CliError> {
    let file = ExtensionFile::from_extension(&t.double_extend());
    let v = serde_json::to_value(&file).expect("extension serializes");
    Ok(Outcome::ok(emit(pretty(&v), out)?))
}

fn table_json(tab: &SpinorTable) -> Value {
    let rows: Vec<Value> = tab
        .entries
        .iter()
        .map(|e| {
            json!({
                "permutation": e.cycles,
                "spinor_a": e.spinor_a.to_string(),
                "spinor_minus_a": e.spinor_minus_a.to_string(),
            })
        })
        .collect();
    json!({
        "type": tab.name,
        "outer_automorphisms": rows,
        "spinor_minus_id": tab.spinor_minus_id.to_string(),
    })
}

fn table_text(tables: &[SpinorTable]) -> String {
    let mut rows: Vec<[String; 4]> = vec![["type".into(), "automorphism".into(), "spinor(a)".into(), "spinor(-a)".into()]];
    for t in tables {
        if t.entries.is_empty() {
            rows.push([t.name.clone(), "no outer automorphisms".into(), "".into(), "".into()]);
        }
        for e in &t.entries {
            rows.push([t.name.clone(), e.cycles.clone(), e.spinor_a.to_string(), e.spinor_minus_a.to_string()]);
        }
        rows.push([t.name.clone(), "-id".into(), t.spinor_minus_id.to_string(), "".into()]);
    }
    let widths: Vec<usize> = (0..4).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for r in &rows {
        let line: Vec<String> = (0..4).map(|c| format!("{:<w$}", r[c], w = widths[c])).collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

pub fn spinor_outer(types: &[FiniteType], all: bool, text: bool) -> Result<Outcome, CliError> {
    let mut tables = Vec::with_capacity(types.len());
    for &t in types {
        require_simply_laced(t)?;
        tables.push(spinor_table(t)?);
    }
    if text {
        return Ok(Outcome::ok(table_text(&tables)));
    }
    let v = if all {
        Value::Array(tables.iter().map(table_json).collect())
    } else {
        table_json(&tables[0])
    };
    Ok(Outcome::ok(pretty(&v)))
}

pub fn spinor_table_types() -> Vec<FiniteType> {
    SPINOR_TABLE_TYPES.iter().map(|&(f, n)| FiniteType::new(f, n).expect("table types are valid")).collect()
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VahlenFlags {
    pub order: bool,
    pub plus: bool,
    pub even: bool,
}

pub fn check_vahlen(matrix: &Path, space: Option<&Path>, flags: VahlenFlags) -> Result<Outcome, CliError> {
    let file: CliffMat2File = read_json(matrix)?;
    let m = file.to_matrix()?;
    if let Some(p) = space {
        let s: QuadSpaceFile = read_json(p)?;
        if s.to_space()? != *m.space().as_ref() {
            return Err(CliError::Malformed("matrix entries live over a different space than --space".into()));
        }
    }
    let verdict = if flags.order { m.is_vahlen_order()? } else { m.is_vahlen() };
    let mut out = Map::new();
    let failed: Option<Value> = match &verdict {
        Verdict::Fails { condition } => Some(json!(condition)),
        Verdict::NotIntegral => Some(json!("integrality")),
        Verdict::Member { lambda } => {
            out.insert("lambda".into(), json!(rat_to_string(lambda)));
            if flags.plus && *lambda != rational::one() {
                Some(json!("lambda"))
            } else if flags.even && !m.is_even() {
                Some(json!("grading"))
            } else {
                None
            }
        }
    };
    out.insert("member".into(), json!(failed.is_none()));
    let code = match failed {
        Some(f) => {
            out.insert("failed".into(), f);
            1
        }
        None => 0,
    };
    Ok(Outcome {
        stdout: pretty(&Value::Object(out)),
        code,
    })
}

fn word_labels(ext: &ExtensionSpec, word: &[usize]) -> Vec<String> {
    word.iter().map(|&i| ext.cartan.labels()[i].clone()).collect()
}

pub fn enumerate(t: FiniteType, max_len: usize, unsafe_limits: bool, out: Option<&Path>) -> Result<Outcome, CliError> {
    require_simply_laced(t)?;
    if max_len > MAX_LEN_LIMIT && !unsafe_limits {
        return Err(CliError::Resource(format!("max-len {max_len} > {MAX_LEN_LIMIT}; pass --unsafe-limits to proceed")));
    }
    let ext = t.double_extend();
    let limits = WeylLimits {
        max_len: max_len.max(MAX_LEN_LIMIT),
        ..WeylLimits::default()
    };
    let elems = enumerate_weyl(&ext, max_len, limits)?;
    let w = &ext.space;
    let witness = w.timelike_witness().ok_or_else(|| CliError::Unsupported("extension space has no time-like vector".into()))?;
    let mut records = Vec::with_capacity(elems.len());
    for e in &elems {
        records.push(json!({
            "word": word_labels(&ext, &e.word),
            "isometry": IsometryFile::from_isometry(&e.isometry).matrix,
            "vahlen": CliffMat2File::from_matrix(&e.vahlen),
            "spinor_class": w.spinor_norm(&e.isometry)?.to_string(),
            "o_plus": w.o_plus_member(&e.isometry, &witness)?,
        }));
    }
    let v = json!({
        "type": ext.name(),
        "max_len": max_len,
        "count": records.len(),
        "elements": records,
    });
    Ok(Outcome::ok(emit(pretty(&v), out)?))
}

pub fn decompose(space: &Path, isometry: &Path) -> Result<Outcome, CliError> {
    let s: QuadSpace = read_json::<QuadSpaceFile>(space)?.to_space()?;
    let g = read_json::<IsometryFile>(isometry)?.to_isometry(&s)?;
    let mirrors = s.cartan_dieudonne(&g)?;
    let recomposes = s.compose_reflections(&mirrors)? == g;
    let o_plus = if s.signature().is_lorentzian() {
        let w = s.timelike_witness().expect("Lorentzian spaces have time-like vectors");
        json!(s.o_plus_member(&g, &w)?)
    } else {
        Value::Null
    };
    let v = json!({
        "mirrors": mirrors.iter().map(vector_json).collect::<Vec<_>>(),
        "recomposes": recomposes,
        "spinor_class": s.mirror_class(&mirrors)?.to_string(),
        "o_plus": o_plus,
    });
    Ok(Outcome {
        stdout: pretty(&v),
        code: if recomposes { 0 } else { 1 },
    })
}

pub fn examples(only: Option<FiniteType>) -> Result<Outcome, CliError> {
    let a1 = FiniteType::new(Family::A, 1)?;
    let a2 = FiniteType::new(Family::A, 2)?;
    let wanted: Vec<FiniteType> = match only {
        None => vec![a1, a2],
        Some(t) if t == a1 || t == a2 => vec![t],
        Some(t) => return Err(CliError::Unsupported(format!("worked examples exist for A1 and A2 only, not {t}"))),
    };
    let mut out = Map::new();
    let mut all = true;
    for t in wanted {
        let ext = t.double_extend();
        let r = if t == a1 { worked_example_a1(&ext)? } else { worked_example_a2(&ext)? };
        all &= r.all_pass();
        out.insert(ext.name(), report_json(&r));
    }
    Ok(Outcome {
        stdout: pretty(&Value::Object(out)),
        code: if all { 0 } else { 1 },
    })
}

