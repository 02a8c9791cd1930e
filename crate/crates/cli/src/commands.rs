//! One function per subcommand. Each resolves names in the workspace,
//! calls into `wfs_core`, and turns the answer into a [`Report`].

use std::time::Instant;

use serde_json::{json, Value};

use wfs_core::cisinski::{lambda, is_fibrant, LambdaConfig, Origin, StarKind};
use wfs_core::fincat::{CatAmbient, CatFunctor, FinCategory};
use wfs_core::finrel::{self, pi0, pi0_map};
use wfs_core::lifting::{rlp_witness, soa_factorize, LiftingProblem};
use wfs_core::{Ambient, Arrow, Bounds, Flavor, IntervalCylinder, ModelContext, RelMap, RelObject};

use crate::dsl::{emit_map, emit_object, ParseError};
use crate::report::{self, BoundsUsed, Exceeded, Report, UNDECIDED};
use crate::suites;
use crate::workspace::{AnyCylinder, Object, Workspace, WorkspaceError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Workspace(#[from] WorkspaceError),
    #[error("{context}: {error}")]
    Core {
        context: String,
        error: wfs_core::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// Defaults for bounds and sampling, shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub depth: usize,
    pub bounds: Bounds,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            depth: 2,
            bounds: Bounds::default(),
            seed: 0x5eed_2024,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Lift {
        left: String,
        right: String,
        top: String,
        bottom: String,
        diagonal: Option<String>,
    },
    Rlp { map: String, genset: Option<String> },
    Llp { map: String, genset: Option<String> },
    Factor { map: String, genset: Option<String> },
    Star { map: String, cylinder: Option<String>, k: Option<usize> },
    Costar { map: String, cylinder: Option<String> },
    Lambda { cylinder: Option<String>, genset: Option<String>, s: Option<String> },
    Fibrant { object: String, model: ModelArgs },
    Homotopic { f: String, g: String, cylinder: Option<String> },
    Heq { map: String, cylinder: Option<String> },
    Weq { map: String, model: ModelArgs },
    Pi0 { name: String },
    Pushout { f: String, g: String },
    CheckCartesian { cylinder: Option<String>, genset: Option<String> },
    CheckExample { name: String },
}

/// Cylinder, generating cofibrations, the extra set `S`, and known
/// members of the saturation to add to the truncated generator levels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModelArgs {
    pub cylinder: Option<String>,
    pub genset: Option<String>,
    pub s: Option<String>,
    pub augment: Option<String>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Lift { .. } => "lift",
            Command::Rlp { .. } => "rlp",
            Command::Llp { .. } => "llp",
            Command::Factor { .. } => "factor",
            Command::Star { .. } => "star",
            Command::Costar { .. } => "costar",
            Command::Lambda { .. } => "lambda",
            Command::Fibrant { .. } => "fibrant",
            Command::Homotopic { .. } => "homotopic",
            Command::Heq { .. } => "heq",
            Command::Weq { .. } => "weq",
            Command::Pi0 { .. } => "pi0",
            Command::Pushout { .. } => "pushout",
            Command::CheckCartesian { .. } => "check-cartesian",
            Command::CheckExample { .. } => "check-example",
        }
    }

    fn echo(&self) -> Value {
        let mut q = match self {
            Command::Lift {
                left,
                right,
                top,
                bottom,
                diagonal,
            } => json!({ "left": left, "right": right, "top": top, "bottom": bottom, "diagonal": diagonal }),
            Command::Rlp { map, genset } | Command::Llp { map, genset } | Command::Factor { map, genset } => {
                json!({ "map": map, "genset": genset })
            }
            Command::Star { map, cylinder, k } => json!({ "map": map, "cylinder": cylinder, "k": k }),
            Command::Costar { map, cylinder } | Command::Heq { map, cylinder } => {
                json!({ "map": map, "cylinder": cylinder })
            }
            Command::Lambda { cylinder, genset, s } => {
                json!({ "cylinder": cylinder, "genset": genset, "s": s })
            }
            Command::Fibrant { object, model } => json!({ "object": object, "model": model_echo(model) }),
            Command::Homotopic { f, g, cylinder } => json!({ "f": f, "g": g, "cylinder": cylinder }),
            Command::Weq { map, model } => json!({ "map": map, "model": model_echo(model) }),
            Command::Pi0 { name } => json!({ "name": name }),
            Command::Pushout { f, g } => json!({ "f": f, "g": g }),
            Command::CheckCartesian { cylinder, genset } => json!({ "cylinder": cylinder, "genset": genset }),
            Command::CheckExample { name } => json!({ "name": name }),
        };
        q["command"] = json!(self.name());
        q
    }
}

fn model_echo(m: &ModelArgs) -> Value {
    json!({ "cylinder": m.cylinder, "genset": m.genset, "s": m.s, "augment": m.augment })
}

/// The answer of a query before it is wrapped into a report.
struct Outcome {
    result: Value,
    witness: Option<Value>,
}

impl Outcome {
    fn plain(result: Value) -> Self {
        Outcome {
            result,
            witness: None,
        }
    }
}

/// An ambient category the command line can address.
pub trait Kind: Ambient {
    fn extract(a: &Arrow) -> Option<&Self::Map>;
    fn ambient_of(f: &Self::Map) -> Self;
    fn cylinder(c: &AnyCylinder) -> Option<&IntervalCylinder<Self>>;
    fn obj_json(x: &Self::Obj) -> Value;
    fn map_json(f: &Self::Map) -> Value;
    fn wrap(f: Self::Map) -> Arrow;
    fn labelled(x: &Self::Obj) -> Object;
    fn name_of<'w>(ws: &'w Workspace, x: &Self::Obj) -> Option<&'w str>;
}

impl Kind for Flavor {
    fn extract(a: &Arrow) -> Option<&RelMap> {
        a.as_rel()
    }
    fn ambient_of(f: &RelMap) -> Self {
        f.src().flavor()
    }
    fn cylinder(c: &AnyCylinder) -> Option<&IntervalCylinder<Self>> {
        match c {
            AnyCylinder::Rel(c) => Some(c),
            AnyCylinder::Cat(_) => None,
        }
    }
    fn obj_json(x: &RelObject) -> Value {
        report::rel_object(x)
    }
    fn map_json(f: &RelMap) -> Value {
        report::rel_map(f)
    }
    fn wrap(f: RelMap) -> Arrow {
        Arrow::Rel(f)
    }
    fn labelled(x: &RelObject) -> Object {
        Object::rel(x.clone())
    }
    fn name_of<'w>(ws: &'w Workspace, x: &RelObject) -> Option<&'w str> {
        ws.name_of_rel(x)
    }
}

impl Kind for CatAmbient {
    fn extract(a: &Arrow) -> Option<&CatFunctor> {
        a.as_cat()
    }
    fn ambient_of(_: &CatFunctor) -> Self {
        CatAmbient::default()
    }
    fn cylinder(c: &AnyCylinder) -> Option<&IntervalCylinder<Self>> {
        match c {
            AnyCylinder::Cat(c) => Some(c),
            AnyCylinder::Rel(_) => None,
        }
    }
    fn obj_json(x: &FinCategory) -> Value {
        report::category(x)
    }
    fn map_json(f: &CatFunctor) -> Value {
        report::functor(f)
    }
    fn wrap(f: CatFunctor) -> Arrow {
        Arrow::Cat(f)
    }
    fn labelled(x: &FinCategory) -> Object {
        Object::cat(x.clone())
    }
    fn name_of<'w>(ws: &'w Workspace, x: &FinCategory) -> Option<&'w str> {
        ws.name_of_cat(x)
    }
}

/// Declarations added on top of the workspace to name results, emitted as
/// DSL text that can be appended to the workspace file.
struct Fragment {
    ws: Workspace,
    text: Vec<String>,
}

impl Fragment {
    fn new(ws: &Workspace) -> Self {
        Fragment {
            ws: ws.clone(),
            text: Vec::new(),
        }
    }

    fn object<K: Kind>(&mut self, x: &K::Obj, base: &str) -> String {
        if let Some(n) = K::name_of(&self.ws, x) {
            return n.to_string();
        }
        let name = self.ws.fresh(base);
        let obj = K::labelled(x);
        self.text.push(emit_object(&name, &obj));
        self.ws.add_object(&name, obj).expect("fresh name");
        name
    }

    fn map<K: Kind>(&mut self, amb: &K, f: &K::Map, base: &str) -> String {
        let src = self.object::<K>(amb.dom(f), &format!("{base}_src"));
        let tgt = self.object::<K>(amb.cod(f), &format!("{base}_tgt"));
        let name = self.ws.fresh(base);
        let arrow = K::wrap(f.clone());
        let s = &self.ws.object(&src).expect("declared").object;
        let t = &self.ws.object(&tgt).expect("declared").object;
        self.text.push(emit_map(&name, &src, &tgt, &arrow, s, t));
        self.ws.add_map(&name, &src, &tgt, arrow).expect("endpoints declared");
        name
    }

    fn dsl(&self) -> String {
        self.text.iter().map(|l| format!("{l}\n")).collect()
    }
}

fn lookup<'w, K: Kind>(ws: &'w Workspace, name: &str) -> Result<&'w K::Map, CliError> {
    K::extract(&ws.map(name)?.arrow)
        .ok_or_else(|| CliError::Usage(format!("map `{name}` is not in the expected category")))
}

/// The named declaration, or the only one of its kind in the workspace.
fn only<T>(items: &[T], name: impl Fn(&T) -> &str, wanted: &Option<String>, kind: &str) -> Result<String, CliError> {
    match wanted {
        Some(n) => Ok(n.clone()),
        None if items.len() == 1 => Ok(name(&items[0]).to_string()),
        None => Err(CliError::Usage(format!(
            "the workspace has {} {kind}s; pick one with --{kind}",
            items.len()
        ))),
    }
}

fn cylinder<'w, K: Kind>(ws: &'w Workspace, wanted: &Option<String>) -> Result<&'w IntervalCylinder<K>, CliError> {
    let name = only(&ws.cylinders, |c| &c.name, wanted, "cylinder")?;
    K::cylinder(&ws.cylinder(&name)?.cylinder)
        .ok_or_else(|| CliError::Usage(format!("cylinder `{name}` is over another kind of object")))
}

fn genset<K: Kind>(ws: &Workspace, wanted: &Option<String>) -> Result<(String, Vec<K::Map>), CliError> {
    let name = only(&ws.gensets, |g| &g.name, wanted, "genset")?;
    let maps = named_set::<K>(ws, &name)?;
    Ok((name, maps))
}

fn named_set<K: Kind>(ws: &Workspace, name: &str) -> Result<Vec<K::Map>, CliError> {
    ws.genset_maps(name)?
        .into_iter()
        .map(|m| lookup::<K>(ws, &m.name).cloned())
        .collect()
}

fn optional_set<K: Kind>(ws: &Workspace, name: &Option<String>) -> Result<Vec<K::Map>, CliError> {
    match name {
        Some(n) => named_set::<K>(ws, n),
        None => Ok(Vec::new()),
    }
}

fn kind_of(ws: &Workspace, map: &str) -> Result<bool, CliError> {
    Ok(matches!(ws.map(map)?.arrow, Arrow::Rel(_)))
}

/// Runs `body` for the ambient of `$map`: relational structures or
/// categories.
macro_rules! by_kind {
    ($ws:expr, $map:expr, $body:ident ( $($arg:expr),* )) => {
        if kind_of($ws, $map)? {
            $body::<Flavor>($($arg),*)
        } else {
            $body::<CatAmbient>($($arg),*)
        }
    };
}

type Step = Result<Outcome, wfs_core::Error>;

fn core_err(context: &str) -> impl Fn(wfs_core::Error) -> CliError + '_ {
    move |error| CliError::Core {
        context: context.to_string(),
        error,
    }
}

pub fn run(ws: &Workspace, cmd: &Command, settings: Settings) -> Result<Report, CliError> {
    if let Command::CheckExample { name } = cmd {
        return suites::check_example(name, settings).map_err(CliError::Usage);
    }
    let start = Instant::now();
    let step: Result<Step, CliError> = match cmd {
        Command::Lift {
            left,
            right,
            top,
            bottom,
            diagonal,
        } => by_kind!(ws, left, lift(ws, settings, [left, right, top, bottom], diagonal)),
        Command::Rlp { map, genset } => by_kind!(ws, map, rlp(ws, settings, map, genset)),
        Command::Llp { map, genset } => by_kind!(ws, map, llp(ws, settings, map, genset)),
        Command::Factor { map, genset } => by_kind!(ws, map, factor(ws, settings, map, genset)),
        Command::Star { map, cylinder, k } => by_kind!(ws, map, star(ws, map, cylinder, *k)),
        Command::Costar { map, cylinder } => costar(ws, map, cylinder),
        Command::Lambda { cylinder, genset, s } => {
            let cname = only(&ws.cylinders, |c| &c.name, cylinder, "cylinder")?;
            match ws.cylinder(&cname)?.cylinder {
                AnyCylinder::Rel(_) => lambda_levels::<Flavor>(ws, settings, cylinder, genset, s),
                AnyCylinder::Cat(_) => lambda_levels::<CatAmbient>(ws, settings, cylinder, genset, s),
            }
        }
        Command::Fibrant { object, model } => match &ws.object(object)?.object {
            Object::Rel { value, .. } => fibrant::<Flavor>(ws, settings, value, model),
            Object::Cat { value, .. } => fibrant::<CatAmbient>(ws, settings, value, model),
        },
        Command::Homotopic { f, g, cylinder } => by_kind!(ws, f, homotopic(ws, f, g, cylinder)),
        Command::Heq { map, cylinder } => by_kind!(ws, map, heq(ws, map, cylinder)),
        Command::Weq { map, model } => by_kind!(ws, map, weq(ws, settings, map, model)),
        Command::Pi0 { name } => pi0_of(ws, name),
        Command::Pushout { f, g } => by_kind!(ws, f, pushout(ws, f, g)),
        Command::CheckCartesian { cylinder, genset } => {
            let cname = only(&ws.cylinders, |c| &c.name, cylinder, "cylinder")?;
            match ws.cylinder(&cname)?.cylinder {
                AnyCylinder::Rel(_) => cartesian::<Flavor>(ws, cylinder, genset),
                AnyCylinder::Cat(_) => cartesian::<CatAmbient>(ws, cylinder, genset),
            }
        }
        Command::CheckExample { .. } => unreachable!("handled above"),
    };
    let mut bounds = BoundsUsed::new(settings.depth, settings.bounds);
    let outcome = match step? {
        Ok(o) => o,
        Err(e) => match Exceeded::from_error(&e) {
            Some(ex) => {
                bounds.exceeded = Some(ex);
                Outcome::plain(json!(UNDECIDED))
            }
            None => return Err(core_err(cmd.name())(e)),
        },
    };
    Ok(Report {
        query: cmd.echo(),
        result: outcome.result,
        witness: outcome.witness,
        bounds,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn lift<K: Kind>(
    ws: &Workspace,
    settings: Settings,
    [left, right, top, bottom]: [&String; 4],
    diagonal: &Option<String>,
) -> Result<Step, CliError> {
    let f = lookup::<K>(ws, left)?;
    let amb = K::ambient_of(f);
    let problem = LiftingProblem::new(
        &amb,
        f.clone(),
        lookup::<K>(ws, right)?.clone(),
        lookup::<K>(ws, top)?.clone(),
        lookup::<K>(ws, bottom)?.clone(),
    )
    .map_err(core_err("lift"))?;
    if let Some(d) = diagonal {
        let d = lookup::<K>(ws, d)?;
        return Ok(problem.is_filler(&amb, d).map(|ok| Outcome::plain(json!(ok))));
    }
    Ok((|| {
        let found = problem.solve(&amb, settings.bounds.square_cap)?;
        let witness = found.map(|d| {
            let mut frag = Fragment::new(ws);
            frag.map(&amb, &d, "diagonal");
            json!({ "diagonal": K::map_json(&d), "dsl": frag.dsl() })
        });
        Ok(Outcome {
            result: json!(witness.is_some()),
            witness,
        })
    })())
}

/// A square without a diagonal, named so it can be replayed with `lift`.
fn square_witness<K: Kind>(
    ws: &Workspace,
    amb: &K,
    left: &str,
    right: &str,
    top: &K::Map,
    bottom: &K::Map,
) -> Value {
    let mut frag = Fragment::new(ws);
    let t = frag.map(amb, top, "top");
    let b = frag.map(amb, bottom, "bottom");
    json!({
        "left": left,
        "right": right,
        "top": K::map_json(top),
        "bottom": K::map_json(bottom),
        "dsl": frag.dsl(),
        "replay": format!("lift {left} {right} {t} {b}"),
    })
}

fn rlp<K: Kind>(ws: &Workspace, settings: Settings, map: &str, gens: &Option<String>) -> Result<Step, CliError> {
    let g = lookup::<K>(ws, map)?;
    let amb = K::ambient_of(g);
    let (set, maps) = genset::<K>(ws, gens)?;
    let names = ws.genset(&set)?.maps.clone();
    Ok((|| {
        Ok(match rlp_witness(&amb, g, &maps, settings.bounds.square_cap)? {
            None => Outcome::plain(json!(true)),
            Some((i, p)) => Outcome {
                result: json!(false),
                witness: Some(square_witness(ws, &amb, &names[i], map, &p.top, &p.bottom)),
            },
        })
    })())
}

fn llp<K: Kind>(ws: &Workspace, settings: Settings, map: &str, gens: &Option<String>) -> Result<Step, CliError> {
    let f = lookup::<K>(ws, map)?;
    let amb = K::ambient_of(f);
    let (set, maps) = genset::<K>(ws, gens)?;
    let names = ws.genset(&set)?.maps.clone();
    Ok((|| {
        for (g, name) in maps.iter().zip(&names) {
            if let Some((top, bottom)) = amb.find_unfilled_square(f, g, settings.bounds.square_cap)? {
                return Ok(Outcome {
                    result: json!(false),
                    witness: Some(square_witness(ws, &amb, map, name, &top, &bottom)),
                });
            }
        }
        Ok(Outcome::plain(json!(true)))
    })())
}

fn factor<K: Kind>(ws: &Workspace, settings: Settings, map: &str, gens: &Option<String>) -> Result<Step, CliError> {
    let f = lookup::<K>(ws, map)?;
    let amb = K::ambient_of(f);
    let (set, maps) = genset::<K>(ws, gens)?;
    let names = ws.genset(&set)?.maps.clone();
    Ok((|| {
        let fact = soa_factorize(&amb, f, &maps, settings.bounds)?;
        let mut frag = Fragment::new(ws);
        frag.object::<K>(amb.cod(&fact.left_part), "middle");
        frag.map(&amb, &fact.left_part, "cell_part");
        frag.map(&amb, &fact.right_part, "right_part");
        let steps: Vec<&str> = fact.steps.iter().map(|s| names[s.generator].as_str()).collect();
        Ok(Outcome {
            result: json!({ "cells": fact.steps.len(), "middle": K::obj_json(amb.cod(&fact.left_part)) }),
            witness: Some(json!({
                "left": K::map_json(&fact.left_part),
                "right": K::map_json(&fact.right_part),
                "steps": steps,
                "dsl": frag.dsl(),
            })),
        })
    })())
}

fn star<K: Kind>(ws: &Workspace, map: &str, cyl: &Option<String>, k: Option<usize>) -> Result<Step, CliError> {
    let f = lookup::<K>(ws, map)?;
    let c = cylinder::<K>(ws, cyl)?;
    if matches!(k, Some(k) if k > 1) {
        return Err(CliError::Usage("--k must be 0 or 1".into()));
    }
    Ok((|| {
        let m = match k {
            Some(k) => c.star_gamma_k(f, k)?,
            None => c.star_gamma(f)?,
        };
        let mut frag = Fragment::new(ws);
        frag.map(c.ambient(), &m, "star");
        Ok(Outcome {
            result: K::map_json(&m),
            witness: Some(json!({ "dsl": frag.dsl() })),
        })
    })())
}

fn costar(ws: &Workspace, map: &str, cyl: &Option<String>) -> Result<Step, CliError> {
    let g = lookup::<Flavor>(ws, map)?;
    let c = cylinder::<Flavor>(ws, cyl)?;
    Ok((|| {
        let m = c.costar(g)?;
        let mut frag = Fragment::new(ws);
        frag.map(c.ambient(), &m, "costar");
        Ok(Outcome {
            result: report::rel_map(&m),
            witness: Some(json!({ "dsl": frag.dsl() })),
        })
    })())
}

fn origin_json(o: &Origin) -> Value {
    match *o {
        Origin::S(i) => json!({ "s": i }),
        Origin::Endpoint { index, k } => json!({ "generator": index, "endpoint": k }),
        Origin::Boundary { parent } => json!({ "boundary_of": parent }),
    }
}

fn lambda_levels<K: Kind>(
    ws: &Workspace,
    settings: Settings,
    cyl: &Option<String>,
    gens: &Option<String>,
    s: &Option<String>,
) -> Result<Step, CliError> {
    let c = cylinder::<K>(ws, cyl)?;
    let (_, i) = genset::<K>(ws, gens)?;
    let s = optional_set::<K>(ws, s)?;
    let config = LambdaConfig {
        depth: settings.depth,
        cap: settings.bounds.square_cap,
        ..LambdaConfig::default()
    };
    Ok((|| {
        let levels = lambda(c, &s, &i, config)?;
        let mut frag = Fragment::new(ws);
        let mut listed = Vec::new();
        for (n, level) in levels.levels.iter().enumerate() {
            for (j, g) in level.iter().enumerate() {
                let name = frag.map(c.ambient(), &g.map, &format!("lambda{n}_{j}"));
                listed.push(json!({
                    "level": n,
                    "name": name,
                    "origin": origin_json(&g.origin),
                    "aliases": g.aliases.iter().map(origin_json).collect::<Vec<_>>(),
                    "map": K::map_json(&g.map),
                }));
            }
        }
        let sizes: Vec<usize> = levels.levels.iter().map(Vec::len).collect();
        Ok(Outcome {
            result: json!({ "levels": sizes, "total": levels.len() }),
            witness: Some(json!({ "generators": listed, "dsl": frag.dsl() })),
        })
    })())
}

/// Generators for fibrations, or the bound that stopped their construction.
type Generators<K> = Result<Vec<<K as Ambient>::Map>, wfs_core::Error>;

/// `flatten(Λ_depth) ∪ augment`.
fn fibration_generators<'w, K: Kind>(
    ws: &'w Workspace,
    settings: Settings,
    model: &ModelArgs,
) -> Result<(&'w IntervalCylinder<K>, Generators<K>), CliError> {
    let c = cylinder::<K>(ws, &model.cylinder)?;
    let (_, i) = genset::<K>(ws, &model.genset)?;
    let s = optional_set::<K>(ws, &model.s)?;
    let augment = optional_set::<K>(ws, &model.augment)?;
    let config = LambdaConfig {
        depth: settings.depth,
        cap: settings.bounds.square_cap,
        ..LambdaConfig::default()
    };
    let gens = lambda(c, &s, &i, config)
        .and_then(|l| l.flatten(c.ambient(), config.cap))
        .map(|mut g| {
            g.extend(augment);
            g
        });
    Ok((c, gens))
}

fn fibrant<K: Kind>(ws: &Workspace, settings: Settings, x: &K::Obj, model: &ModelArgs) -> Result<Step, CliError> {
    let (c, gens) = fibration_generators::<K>(ws, settings, model)?;
    let amb = c.ambient();
    Ok((|| {
        let gens = gens?;
        let to_point = amb.to_terminal(x);
        if is_fibrant(amb, x, &gens, settings.bounds.square_cap)? {
            return Ok(Outcome::plain(json!(true)));
        }
        let (i, p) = rlp_witness(amb, &to_point, &gens, settings.bounds.square_cap)?
            .expect("a non-fibrant object has an unfilled square");
        let mut frag = Fragment::new(ws);
        let g = frag.map(amb, &gens[i], "generator");
        let t = frag.map(amb, &p.top, "top");
        Ok(Outcome {
            result: json!(false),
            witness: Some(json!({
                "generator": K::map_json(&gens[i]),
                "top": K::map_json(&p.top),
                "generators_checked": gens.len(),
                "dsl": frag.dsl(),
                "note": format!("{t} extends along {g} to no map into the object"),
            })),
        })
    })())
}

fn homotopic<K: Kind>(ws: &Workspace, f: &str, g: &str, cyl: &Option<String>) -> Result<Step, CliError> {
    let (fm, gm) = (lookup::<K>(ws, f)?, lookup::<K>(ws, g)?);
    let c = cylinder::<K>(ws, cyl)?;
    Ok((|| {
        let h = c.homotopic(fm, gm)?;
        let witness = h.map(|w| {
            let mut frag = Fragment::new(ws);
            frag.map(c.ambient(), &w.h, "homotopy");
            json!({ "homotopy": K::map_json(&w.h), "dsl": frag.dsl() })
        });
        Ok(Outcome {
            result: json!(witness.is_some()),
            witness,
        })
    })())
}

fn heq<K: Kind>(ws: &Workspace, map: &str, cyl: &Option<String>) -> Result<Step, CliError> {
    let f = lookup::<K>(ws, map)?;
    let c = cylinder::<K>(ws, cyl)?;
    Ok((|| {
        let e = c.is_homotopy_equivalence(f)?;
        let witness = e.map(|e| {
            let mut frag = Fragment::new(ws);
            frag.map(c.ambient(), &e.inverse, "inverse");
            json!({ "inverse": K::map_json(&e.inverse), "dsl": frag.dsl() })
        });
        Ok(Outcome {
            result: json!(witness.is_some()),
            witness,
        })
    })())
}

fn weq<K: Kind>(ws: &Workspace, settings: Settings, map: &str, model: &ModelArgs) -> Result<Step, CliError> {
    let f = lookup::<K>(ws, map)?;
    let (c, gens) = fibration_generators::<K>(ws, settings, model)?;
    Ok((|| {
        let ctx = ModelContext::new(c.clone(), gens?, settings.bounds);
        let amb = ctx.ambient();
        let verdict = ctx.weq(f)?;
        match verdict.decided() {
            Some(v) => {
                let rx = ctx.replacement(amb.dom(f))?;
                let ry = ctx.replacement(amb.cod(f))?;
                Ok(Outcome {
                    result: json!(v),
                    witness: Some(json!({
                        "generators": ctx.gens.len(),
                        "cells": [rx.cells, ry.cells],
                        "transported": K::map_json(&ctx.transport(f)?),
                    })),
                })
            }
            None => match verdict {
                wfs_core::Verdict::Undecided(e) => Err(e),
                _ => unreachable!("undecided verdicts carry their bound"),
            },
        }
    })())
}

fn pi0_of(ws: &Workspace, name: &str) -> Result<Step, CliError> {
    if let Ok(entry) = ws.object(name) {
        let Object::Rel { value, .. } = &entry.object else {
            return Err(CliError::Usage("pi0 applies to relational objects".into()));
        };
        let (c, q) = pi0(value);
        let mut frag = Fragment::new(ws);
        frag.map(&value.flavor(), &q, "components");
        return Ok(Ok(Outcome {
            result: json!({ "components": c.size(), "object": report::rel_object(&c) }),
            witness: Some(json!({ "quotient": report::rel_map(&q), "dsl": frag.dsl() })),
        }));
    }
    let f = lookup::<Flavor>(ws, name)?;
    let m = pi0_map(f);
    Ok(Ok(Outcome {
        result: json!({ "map": report::rel_map(&m), "bijective": finrel::pi0_bijective(f) }),
        witness: None,
    }))
}

fn pushout<K: Kind>(ws: &Workspace, f: &str, g: &str) -> Result<Step, CliError> {
    let (fm, gm) = (lookup::<K>(ws, f)?, lookup::<K>(ws, g)?);
    let amb = K::ambient_of(fm);
    Ok((|| {
        let po = amb.pushout(fm, gm)?;
        let mut frag = Fragment::new(ws);
        frag.object::<K>(&po.apex, "pushout");
        frag.map(&amb, &po.legs[0], "leg_b");
        frag.map(&amb, &po.legs[1], "leg_c");
        Ok(Outcome {
            result: K::obj_json(&po.apex),
            witness: Some(json!({
                "legs": [K::map_json(&po.legs[0]), K::map_json(&po.legs[1])],
                "dsl": frag.dsl(),
            })),
        })
    })())
}

fn cartesian<K: Kind>(ws: &Workspace, cyl: &Option<String>, gens: &Option<String>) -> Result<Step, CliError> {
    let c = cylinder::<K>(ws, cyl)?;
    let (set, maps) = genset::<K>(ws, gens)?;
    let names = ws.genset(&set)?.maps.clone();
    Ok((|| {
        let r = c.check_cartesian(&maps)?;
        let failures: Vec<Value> = r
            .failures
            .iter()
            .map(|(i, kind)| {
                let which = match kind {
                    StarKind::Boundary => "gamma".to_string(),
                    StarKind::Endpoint(k) => format!("gamma{k}"),
                };
                json!({ "generator": names[*i], "product": which })
            })
            .collect();
        Ok(Outcome {
            result: json!(r.passed()),
            witness: Some(json!({ "checked": r.checked, "failures": failures })),
        })
    })())
}
