//! Reports: a stable JSON schema and a plain text rendering.

use serde::Serialize;
use serde_json::{json, Value};

use wfs_core::fincat::{CatFunctor, FinCategory};
use wfs_core::{Bounds, Error, RelMap, RelObject};

/// Bounds in force for a query, and the one exceeded if the answer is
/// UNDECIDED.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BoundsUsed {
    pub depth: usize,
    pub max_cells: usize,
    pub search_cap: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceeded: Option<Exceeded>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Exceeded {
    pub bound: &'static str,
    pub limit: u64,
    pub message: String,
}

impl Exceeded {
    pub fn from_error(e: &Error) -> Option<Exceeded> {
        let (bound, limit) = match *e {
            Error::SearchCap { cap } => ("search_cap", cap),
            Error::CellBound { max_steps } => ("max_cells", max_steps as u64),
            Error::SizeGuard { limit, .. } => ("size_limit", limit as u64),
            Error::PushoutUnstable { max_classes, .. } => ("pushout_classes", max_classes as u64),
            _ => return None,
        };
        Some(Exceeded {
            bound,
            limit,
            message: e.to_string(),
        })
    }
}

impl BoundsUsed {
    pub fn new(depth: usize, bounds: Bounds) -> Self {
        BoundsUsed {
            depth,
            max_cells: bounds.max_steps,
            search_cap: bounds.square_cap,
            exceeded: None,
        }
    }
}

pub const UNDECIDED: &str = "UNDECIDED";

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub query: Value,
    /// A boolean, a structure, or the string `UNDECIDED`.
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub bounds: BoundsUsed,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn is_undecided(&self) -> bool {
        self.result == Value::String(UNDECIDED.into())
    }

    /// Process exit status: 0 when decided (and, for suites, when every
    /// claim passes), 1 on a failed suite, 2 when anything is UNDECIDED.
    pub fn exit_code(&self) -> i32 {
        if self.is_undecided() {
            return 2;
        }
        match self.result.get("claims") {
            Some(_) => {
                if self.result["undecided"].as_u64() != Some(0) {
                    2
                } else if self.result["failed"].as_u64() != Some(0) {
                    1
                } else {
                    0
                }
            }
            None => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let command = self.query["command"].as_str().unwrap_or("query");
        out.push_str(&format!("{command}: {}\n", text_value(&self.result)));
        if let Some(claims) = self.result.get("claims").and_then(Value::as_array) {
            for c in claims {
                out.push_str(&format!(
                    "  {:<9} {:<24} {}  [{}; {} ms]\n",
                    c["status"].as_str().unwrap_or("?"),
                    c["id"].as_str().unwrap_or("?"),
                    c["tag"].as_str().unwrap_or(""),
                    c["detail"].as_str().unwrap_or(""),
                    c["elapsed_ms"]
                ));
            }
        }
        if let Some(w) = &self.witness {
            if let Some(dsl) = w.get("dsl").and_then(Value::as_str) {
                out.push_str("witness:\n");
                for line in dsl.lines() {
                    out.push_str(&format!("  {line}\n"));
                }
                if let Some(replay) = w.get("replay").and_then(Value::as_str) {
                    out.push_str(&format!("replay: {replay}\n"));
                }
            } else {
                out.push_str(&format!("witness: {w}\n"));
            }
        }
        if let Some(e) = &self.bounds.exceeded {
            out.push_str(&format!("exceeded: {} = {} ({})\n", e.bound, e.limit, e.message));
        }
        out.push_str(&format!(
            "bounds: depth {}, max cells {}, search cap {}; {} ms\n",
            self.bounds.depth, self.bounds.max_cells, self.bounds.search_cap, self.elapsed_ms
        ));
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Bool(b) => b.to_string(),
        Value::String(s) => s.clone(),
        Value::Object(m) => match (m.get("passed"), m.get("failed"), m.get("undecided")) {
            (Some(p), Some(f), Some(u)) => format!("{p} passed, {f} failed, {u} undecided"),
            _ => v.to_string(),
        },
        other => other.to_string(),
    }
}

pub fn rel_object(x: &RelObject) -> Value {
    let pairs: Vec<[usize; 2]> = x.pairs().map(|(a, b)| [a, b]).collect();
    json!({ "kind": x.flavor().name(), "size": x.size(), "pairs": pairs })
}

pub fn rel_map(f: &RelMap) -> Value {
    json!({ "src": rel_object(f.src()), "tgt": rel_object(f.tgt()), "assign": f.assign() })
}

pub fn category(c: &FinCategory) -> Value {
    let arrows: Vec<[usize; 2]> = (0..c.n_arrows()).map(|a| [c.src(a), c.tgt(a)]).collect();
    let mut composites = Vec::new();
    for f in 0..c.n_arrows() {
        for g in c.arrows_from(c.tgt(f)) {
            composites.push([f, g, c.then(f, g)]);
        }
    }
    json!({ "kind": "cat", "objects": c.n_obj(), "arrows": arrows, "composites": composites })
}

pub fn functor(f: &CatFunctor) -> Value {
    json!({
        "src": category(f.src()),
        "tgt": category(f.tgt()),
        "objects": f.obj_map(),
        "arrows": f.arr_map(),
    })
}
