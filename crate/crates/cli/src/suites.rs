//! Example suites. Each suite is a TOML file under `suites/` listing
//! claims; a claim names a check and carries its parameters and expected
//! values. Claims run in parallel and are reported in file order.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use wfs_core::cisinski::{closed_form, is_fibrant, lambda, standard, LambdaConfig, Origin};
use wfs_core::corpus;
use wfs_core::fincat::{enumerate_functors, CatAmbient, CatFunctor, FinCategory};
use wfs_core::finrel::{self, homs, ReflectionKind};
use wfs_core::lifting::{box_rel, has_rlp, in_lbox_rbox, soa_factorize};
use wfs_core::{Ambient, Arrow, CofibrationClass, Error, Flavor, RelMap, RelObject, Verdict};

use crate::commands::Settings;
use crate::dsl::parse_document;
use crate::report::{BoundsUsed, Report};
use crate::workspace::{AnyCylinder, Workspace};

/// Suite files shipped with the binary, by name.
pub const SUITES: &[(&str, &str)] = &[
    ("cat-folk", include_str!("../suites/cat-folk.toml")),
    ("prord", include_str!("../suites/prord.toml")),
    ("ord", include_str!("../suites/ord.toml")),
    ("set-indiscrete", include_str!("../suites/set-indiscrete.toml")),
    ("rsrel", include_str!("../suites/rsrel.toml")),
    ("eqrel", include_str!("../suites/eqrel.toml")),
    ("conjugation", include_str!("../suites/conjugation.toml")),
    ("soa", include_str!("../suites/soa.toml")),
];

#[derive(Clone, Debug, Deserialize)]
pub struct Suite {
    pub name: String,
    pub summary: String,
    #[serde(rename = "claim")]
    pub claims: Vec<Claim>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Claim {
    pub id: String,
    /// What the claim reproduces, in words.
    pub tag: String,
    pub check: String,
    #[serde(flatten)]
    pub params: toml::Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undecided => "UNDECIDED",
        }
    }
}

pub fn load(name: &str) -> Option<Suite> {
    SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| toml::from_str(text).unwrap_or_else(|e| panic!("suite `{name}` is malformed: {e}")))
}

/// Resolves `suite` or `suite-claim`.
fn select(name: &str) -> Option<(Suite, Option<String>)> {
    if let Some(s) = load(name) {
        return Some((s, None));
    }
    name.match_indices('-').find_map(|(i, _)| {
        let suite = load(&name[..i])?;
        let claim = &name[i + 1..];
        suite
            .claims
            .iter()
            .any(|c| c.id == claim)
            .then(|| (suite.clone(), Some(claim.to_string())))
    })
}

pub fn check_example(name: &str, settings: Settings) -> Result<Report, String> {
    let (suite, only) = select(name).ok_or_else(|| {
        let names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
        format!("unknown example `{name}`; expected one of {} (optionally followed by -<claim>)", names.join(", "))
    })?;
    let start = Instant::now();
    let claims: Vec<&Claim> = suite
        .claims
        .iter()
        .filter(|c| only.as_ref().is_none_or(|o| &c.id == o))
        .collect();
    let outcomes: Vec<(Status, String, u64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = claims
            .iter()
            .map(|c| scope.spawn(move || run_claim(c, settings)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or((Status::Fail, "check panicked".into(), 0)))
            .collect()
    });
    let count = |s: Status| outcomes.iter().filter(|o| o.0 == s).count();
    let listed: Vec<Value> = claims
        .iter()
        .zip(&outcomes)
        .map(|(c, (status, detail, ms))| {
            json!({ "id": c.id, "tag": c.tag, "status": status.name(), "detail": detail, "elapsed_ms": ms })
        })
        .collect();
    Ok(Report {
        query: json!({ "command": "check-example", "name": name }),
        result: json!({
            "suite": suite.name,
            "summary": suite.summary,
            "claims": listed,
            "passed": count(Status::Pass),
            "failed": count(Status::Fail),
            "undecided": count(Status::Undecided),
        }),
        witness: None,
        bounds: BoundsUsed::new(settings.depth, settings.bounds),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

type Checked = Result<(Status, String), Error>;

fn run_claim(claim: &Claim, settings: Settings) -> (Status, String, u64) {
    let start = Instant::now();
    let out = Params {
        claim,
        settings,
    }
    .run();
    let ms = start.elapsed().as_millis() as u64;
    match out {
        Ok((s, d)) => (s, d, ms),
        Err(e) if e.is_bound() => (Status::Undecided, e.to_string(), ms),
        Err(e) => (Status::Fail, format!("error: {e}"), ms),
    }
}

fn verdict(ok: bool, detail: String) -> Checked {
    Ok((if ok { Status::Pass } else { Status::Fail }, detail))
}

/// Pass only when nothing is wrong and nothing is undecided.
fn tally(wrong: usize, undecided: usize, detail: String) -> Checked {
    let status = if undecided > 0 {
        Status::Undecided
    } else if wrong > 0 {
        Status::Fail
    } else {
        Status::Pass
    };
    Ok((status, detail))
}

struct Params<'a> {
    claim: &'a Claim,
    settings: Settings,
}

impl Params<'_> {
    fn get(&self, key: &str) -> Result<&toml::Value, Error> {
        self.claim
            .params
            .get(key)
            .ok_or_else(|| Error::Internal(format!("claim `{}` needs `{key}`", self.claim.id)))
    }

    fn usize(&self, key: &str) -> Result<usize, Error> {
        self.get(key)?
            .as_integer()
            .map(|v| v as usize)
            .ok_or_else(|| Error::Internal(format!("`{key}` must be an integer")))
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize, Error> {
        if self.claim.params.contains_key(key) {
            self.usize(key)
        } else {
            Ok(default)
        }
    }

    fn str(&self, key: &str) -> Result<&str, Error> {
        self.get(key)?
            .as_str()
            .ok_or_else(|| Error::Internal(format!("`{key}` must be a string")))
    }

    fn bool_or(&self, key: &str, default: bool) -> bool {
        self.claim.params.get(key).and_then(toml::Value::as_bool).unwrap_or(default)
    }

    fn cap(&self) -> u64 {
        self.settings.bounds.square_cap
    }

    fn example(&self) -> Result<standard::Example<Flavor>, Error> {
        Ok(match self.str("example")? {
            "rsrel" => standard::rsrel(),
            "eqrel" => standard::eqrel(),
            "prord" => standard::prord(),
            "ord" => standard::ord(),
            "set-indiscrete" => standard::set_indiscrete(),
            other => return Err(Error::Internal(format!("unknown example `{other}`"))),
        })
    }

    /// The objects of an example's category up to `max_size` elements.
    fn objects(&self, name: &str, max: usize) -> Result<Vec<RelObject>, Error> {
        let classes = self.bool_or("classes", false);
        let all = |f: Flavor| {
            if classes {
                corpus::classes_up_to(f, max)
            } else {
                Ok(corpus::labelled_up_to(f, max))
            }
        };
        match name {
            "rsrel" => all(Flavor::Graph),
            "eqrel" => all(Flavor::EqRel),
            "prord" => all(Flavor::Preord),
            "ord" => all(Flavor::Ord),
            "set-indiscrete" => (0..=max).map(|n| RelObject::complete(Flavor::Preord, n)).collect(),
            other => Err(Error::Internal(format!("unknown example `{other}`"))),
        }
    }

    fn corpus(&self) -> Result<Vec<RelObject>, Error> {
        let objs = self.objects(self.str("example")?, self.usize("max_size")?)?;
        if self.bool_or("transitive_only", false) {
            return Ok(objs.into_iter().filter(RelObject::is_transitive).collect());
        }
        Ok(objs)
    }

    fn maps(&self, objs: &[RelObject]) -> Result<Vec<RelMap>, Error> {
        let mut out = Vec::new();
        for x in objs {
            for y in objs {
                out.extend(homs(x, y, self.cap())?);
            }
        }
        Ok(out)
    }

    fn workspace(&self, key: &str) -> Result<Workspace, Error> {
        parse_document(self.str(key)?).map_err(|e| Error::Internal(format!("`{key}`: {e}")))
    }

    fn rel_map(&self, ws: &Workspace, key: &str) -> Result<RelMap, Error> {
        let name = self.str(key)?;
        match ws.map(name).map(|m| &m.arrow) {
            Ok(Arrow::Rel(f)) => Ok(f.clone()),
            _ => Err(Error::Internal(format!("`{name}` is not a relational map"))),
        }
    }

    fn run(&self) -> Checked {
        match self.claim.check.as_str() {
            "right-class" => self.right_class(),
            "left-class" => self.left_class(),
            "star-endpoint" => self.star_endpoint(),
            "star-endpoints-agree" => self.star_endpoints_agree(),
            "pushout-leg" => self.pushout_leg(),
            "fibrant-iff" => self.fibrant_iff(),
            "homotopy-closed-form" => self.homotopy_closed_form(),
            "weq-iff" => self.weq_iff(),
            "weq-of" => self.weq_of(),
            "homotopy-equivalence-relation" => self.homotopy_equivalence_relation(),
            "induced-homotopy-agrees" => self.induced_homotopy_agrees(),
            "conjugation" => self.conjugation(),
            "soa-factorization" => self.soa_factorization(),
            "cartesian" => self.cartesian(),
            "cat-lambda0" => self.cat_lambda0(),
            "cat-pushout-squares" => self.cat_pushout_squares(),
            "cat-homotopy" => self.cat_homotopy(),
            other => Err(Error::Internal(format!("unknown check `{other}`"))),
        }
    }

    fn predicate(&self, key: &str) -> Result<fn(&RelMap) -> bool, Error> {
        Ok(match self.str(key)? {
            "surjective" => RelMap::is_surjective,
            "surjective-full" => |f| f.is_surjective() && f.is_full(),
            "iso" => RelMap::is_iso,
            "pi0-bijective" => finrel::pi0_bijective,
            "preorder-equivalence" => preorder_equivalence,
            "nonempty-or-empty-identity" => |f| f.src().is_empty() == f.tgt().is_empty(),
            other => return Err(Error::Internal(format!("unknown predicate `{other}`"))),
        })
    }

    /// `has_rlp(f, I)` against a closed form, exhaustively and on sampled
    /// pairs of larger random objects.
    fn right_class(&self) -> Checked {
        let ex = self.example()?;
        let pred = self.predicate("expect")?;
        let maps = self.maps(&self.corpus()?)?;
        let (mut checked, mut wrong) = (0, 0);
        let mut check = |f: &RelMap| -> Result<(), Error> {
            checked += 1;
            if has_rlp(&ex.cylinder.ambient().clone(), f, &ex.generators, self.cap())? != pred(f) {
                wrong += 1;
            }
            Ok(())
        };
        for f in &maps {
            check(f)?;
        }
        let samples = self.usize_or("samples", 0)?;
        if samples > 0 {
            let n = self.usize("sample_size")?;
            let mut rng = ChaCha8Rng::seed_from_u64(self.settings.seed);
            for _ in 0..samples {
                let x = random_graph(&mut rng, n);
                let y = random_graph(&mut rng, n);
                for f in homs(&x, &y, self.cap())? {
                    check(&f)?;
                }
            }
        }
        tally(wrong, 0, format!("{checked} maps, {samples} sampled pairs, {wrong} mismatches"))
    }

    /// Membership in the left class of the right class of `I` against a
    /// closed form.
    fn left_class(&self) -> Checked {
        let ex = self.example()?;
        let expect_all = match self.str("expect")? {
            "mono" => false,
            "all" => true,
            other => return Err(Error::Internal(format!("unknown predicate `{other}`"))),
        };
        let maps = self.maps(&self.corpus()?)?;
        let amb = *ex.cylinder.ambient();
        // Within the corpus: lifting against every corpus map in the right
        // class. Needed when the example is a full subcategory whose
        // pushouts differ from the ambient ones.
        let within_corpus = self.str("method").ok() == Some("corpus");
        let mut right = Vec::new();
        if within_corpus {
            for g in &maps {
                if has_rlp(&amb, g, &ex.generators, self.cap())? {
                    right.push(g);
                }
            }
        }
        let mut wrong = 0;
        for f in &maps {
            let member = if within_corpus {
                let mut all = true;
                for g in &right {
                    if !box_rel(&amb, f, g, self.cap())? {
                        all = false;
                        break;
                    }
                }
                all
            } else {
                in_lbox_rbox(&amb, f, &ex.generators, self.settings.bounds)?
            };
            if member != (expect_all || f.is_mono()) {
                wrong += 1;
            }
        }
        let against = if within_corpus {
            format!(", against {} right-class maps", right.len())
        } else {
            String::new()
        };
        tally(wrong, 0, format!("{} maps{against}, {wrong} mismatches", maps.len()))
    }

    fn rel_cylinder(&self, ws: &Workspace) -> Result<wfs_core::IntervalCylinder<Flavor>, Error> {
        match ws.cylinders.first().map(|c| &c.cylinder) {
            Some(AnyCylinder::Rel(c)) => Ok(c.clone()),
            _ => Err(Error::Internal("input needs a relational cylinder".into())),
        }
    }

    fn star_endpoint(&self) -> Checked {
        let ws = self.workspace("input")?;
        let c = self.rel_cylinder(&ws)?;
        let f = self.rel_map(&ws, "map")?;
        let m = c.star_gamma_k(&f, self.usize("k")?)?;
        let expected_ws = self.workspace("expected")?;
        let expected = self.rel_map(&expected_ws, "expected_map")?;
        let iso = c.ambient().arrow_iso(&m, &expected, self.cap())?.is_some();
        verdict(
            iso,
            format!(
                "computed {} vertices, {} edges into {} vertices",
                m.src().size(),
                m.src().num_pairs() / 2,
                m.tgt().size()
            ),
        )
    }

    fn star_endpoints_agree(&self) -> Checked {
        let ws = self.workspace("input")?;
        let c = self.rel_cylinder(&ws)?;
        let f = self.rel_map(&ws, "map")?;
        let (m0, m1) = (c.star_gamma_k(&f, 0)?, c.star_gamma_k(&f, 1)?);
        verdict(
            c.ambient().arrow_iso(&m0, &m1, self.cap())?.is_some(),
            "k = 0 against k = 1".into(),
        )
    }

    fn pushout_leg(&self) -> Checked {
        let ws = self.workspace("input")?;
        let f = self.rel_map(&ws, "left")?;
        let g = self.rel_map(&ws, "right")?;
        let po = finrel::pushout(&f, &g)?;
        let expected_ws = self.workspace("expected")?;
        let expected = self.rel_map(&expected_ws, "expected_map")?;
        let iso = finrel::arrow_iso(&po.legs[1], &expected, self.cap())?.is_some();
        verdict(iso, format!("pushout has {} elements", po.apex.size()))
    }

    fn fibrant_iff(&self) -> Checked {
        let ex = self.example()?;
        let gens = ex.fibration_generators(self.settings.depth)?;
        let objs = self.corpus()?;
        let expect = self.str("expect")?;
        let mut wrong = 0;
        for x in &objs {
            let want = match expect {
                "transitive" => x.is_transitive(),
                "all" => true,
                other => return Err(Error::Internal(format!("unknown predicate `{other}`"))),
            };
            if is_fibrant(ex.cylinder.ambient(), x, &gens, self.cap())? != want {
                wrong += 1;
            }
        }
        tally(
            wrong,
            0,
            format!("{} objects, {} generators, {wrong} mismatches", objs.len(), gens.len()),
        )
    }

    fn homotopy_closed_form(&self) -> Checked {
        let c = self.example()?.cylinder;
        let objs = self.corpus()?;
        let (mut pairs, mut wrong) = (0, 0);
        for x in &objs {
            let probe = c.probe(x)?;
            for y in &objs {
                let maps = homs(x, y, self.cap())?;
                for f in &maps {
                    for g in &maps {
                        pairs += 1;
                        if probe.homotopic(f, g)?.is_some() != closed_form::rel_homotopic(f, g) {
                            wrong += 1;
                        }
                    }
                }
            }
        }
        tally(wrong, 0, format!("{pairs} parallel pairs, {wrong} mismatches"))
    }

    fn weq_iff(&self) -> Checked {
        let ex = self.example()?;
        let pred = self.predicate("expect")?;
        let ctx = ex.model(self.settings.depth, self.settings.bounds)?;
        let maps = self.maps(&self.corpus()?)?;
        let (mut wrong, mut undecided) = (0, 0);
        for f in &maps {
            match ctx.weq(f)?.decided() {
                None => undecided += 1,
                Some(v) if v != pred(f) => wrong += 1,
                _ => {}
            }
        }
        tally(
            wrong,
            undecided,
            format!("{} maps, {wrong} mismatches, {undecided} undecided", maps.len()),
        )
    }

    fn weq_of(&self) -> Checked {
        let ex = self.example()?;
        let ctx = ex.model(self.settings.depth, self.settings.bounds)?;
        let ws = self.workspace("input")?;
        let f = self.rel_map(&ws, "map")?;
        let want = self.bool_or("expect", true);
        match ctx.weq(&f)? {
            Verdict::Undecided(e) => Ok((Status::Undecided, e.to_string())),
            v => verdict(v.decided() == Some(want), format!("weq = {}", v.decided() == Some(true))),
        }
    }

    fn homotopy_equivalence_relation(&self) -> Checked {
        let c = self.example()?.cylinder;
        let objs = self.corpus()?;
        let (mut sets, mut bad) = (0, 0);
        for x in &objs {
            let probe = c.probe(x)?;
            for y in &objs {
                let maps = homs(x, y, self.cap())?;
                let n = maps.len();
                let mut rel = vec![false; n * n];
                for i in 0..n {
                    for j in 0..n {
                        rel[i * n + j] = probe.homotopic(&maps[i], &maps[j])?.is_some();
                    }
                }
                sets += 1;
                let reflexive = (0..n).all(|i| rel[i * n + i]);
                let symmetric = (0..n).all(|i| (0..n).all(|j| rel[i * n + j] == rel[j * n + i]));
                let transitive = (0..n).all(|i| {
                    (0..n).all(|j| !rel[i * n + j] || (0..n).all(|l| !rel[j * n + l] || rel[i * n + l]))
                });
                if !(reflexive && symmetric && transitive) {
                    bad += 1;
                }
            }
        }
        tally(bad, 0, format!("{} objects, {sets} hom-sets, {bad} failures", objs.len()))
    }

    fn induced_homotopy_agrees(&self) -> Checked {
        let graph_cyl = standard::rsrel().cylinder;
        let induced = graph_cyl.induced(ReflectionKind::TransitiveClosure, CofibrationClass::Monomorphisms)?;
        let objs = corpus::labelled_up_to(Flavor::EqRel, self.usize("max_size")?);
        let (mut pairs, mut wrong) = (0, 0);
        for x in &objs {
            let probe = induced.probe(x)?;
            let graph_probe = graph_cyl.probe(&x.reflavor(Flavor::Graph)?)?;
            for y in &objs {
                let maps = homs(x, y, self.cap())?;
                let embedded = maps
                    .iter()
                    .map(|f| finrel::embed_map(f, ReflectionKind::TransitiveClosure))
                    .collect::<Result<Vec<_>, _>>()?;
                for i in 0..maps.len() {
                    for j in 0..maps.len() {
                        pairs += 1;
                        let a = probe.homotopic(&maps[i], &maps[j])?.is_some();
                        let b = graph_probe.homotopic(&embedded[i], &embedded[j])?.is_some();
                        if a != b {
                            wrong += 1;
                        }
                    }
                }
            }
        }
        tally(wrong, 0, format!("{} objects, {pairs} parallel pairs, {wrong} mismatches", objs.len()))
    }

    fn conjugation(&self) -> Checked {
        let c = self.example()?.cylinder;
        let amb = *c.ambient();
        let maps = self.maps(&self.corpus()?)?;
        let samples = self.usize("samples")?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.settings.seed);
        let mut wrong = 0;
        for _ in 0..samples {
            let f = maps.choose(&mut rng).expect("nonempty corpus");
            let g = maps.choose(&mut rng).expect("nonempty corpus");
            let lhs = box_rel(&amb, &c.star_gamma(f)?, g, self.cap())?;
            let rhs = box_rel(&amb, f, &c.costar(g)?, self.cap())?;
            if lhs != rhs {
                wrong += 1;
            }
        }
        tally(
            wrong,
            0,
            format!("{samples} sampled pairs from {} maps, seed {:#x}, {wrong} discrepancies", maps.len(), self.settings.seed),
        )
    }

    fn soa_factorization(&self) -> Checked {
        let ex = self.example()?;
        let amb = *ex.cylinder.ambient();
        let maps = self.maps(&self.corpus()?)?;
        let (mut cells, mut bad) = (0, 0);
        for f in &maps {
            let fact = soa_factorize(&amb, f, &ex.generators, self.settings.bounds)?;
            cells += fact.steps.len();
            if !fact.revalidate(&amb, f, &ex.generators, self.cap())? {
                bad += 1;
            }
        }
        tally(bad, 0, format!("{} maps, {cells} cells, {bad} invalid", maps.len()))
    }

    fn cartesian(&self) -> Checked {
        let report = match self.str("example")? {
            "cat-folk" => {
                let ex = standard::cat();
                ex.cylinder.check_cartesian(&ex.generators)?
            }
            _ => {
                let ex = self.example()?;
                ex.cylinder.check_cartesian(&ex.generators)?
            }
        };
        verdict(
            report.passed(),
            format!("{} pushout-products, {} outside the cofibrations", report.checked, report.failures.len()),
        )
    }

    /// Level 0 is the two endpoints of the interval up to arrow
    /// isomorphism, both from the point generator; later levels are empty.
    fn cat_lambda0(&self) -> Checked {
        let ex = standard::cat();
        let c = &ex.cylinder;
        let cat = CatAmbient::default();
        let config = LambdaConfig {
            depth: self.settings.depth,
            ..LambdaConfig::default()
        };
        let levels = lambda(c, &ex.s, &ex.generators, config)?;
        let ends = [c.endpoint(0).clone(), c.endpoint(1).clone()];
        let level0 = &levels.levels[0];
        let mut members_are_ends = true;
        for g in level0 {
            let mut any = false;
            for e in &ends {
                any |= cat.arrow_iso(&g.map, e, self.cap())?.is_some();
            }
            members_are_ends &= any;
        }
        let mut covered = true;
        for e in &ends {
            let mut any = false;
            for g in level0 {
                any |= cat.arrow_iso(&g.map, e, self.cap())?.is_some();
            }
            covered &= any;
        }
        let origins: Vec<Origin> = level0
            .iter()
            .flat_map(|g| std::iter::once(g.origin).chain(g.aliases.iter().copied()))
            .collect();
        let from_point = origins.iter().all(|o| matches!(o, Origin::Endpoint { index: 0, .. }));
        let rest_empty = levels.levels[1..].iter().all(Vec::is_empty);
        let expected_origins = self.usize("origins")?;
        verdict(
            members_are_ends && covered && from_point && rest_empty && origins.len() == expected_origins,
            format!(
                "level 0: {} class(es), {} origins; later levels: {:?}",
                level0.len(),
                origins.len(),
                levels.levels[1..].iter().map(Vec::len).collect::<Vec<_>>()
            ),
        )
    }

    fn cat_pushout_squares(&self) -> Checked {
        let ex = standard::cat();
        let c = &ex.cylinder;
        let cat = CatAmbient::default();
        let tests: Vec<FinCategory> = corpus::categories()
            .into_iter()
            .map(|(_, c)| c)
            .filter(|c| c.n_obj() <= 2 && c.n_arrows() <= 6)
            .collect();
        let (mut squares, mut bad) = (0, 0);
        for k in 0..2 {
            for i in [standard::cat_boundary(), standard::parallel_collapse()] {
                let top = c.gamma_k(i.src(), k)?;
                let right = c.cyl_map(&i)?;
                let bottom = c.gamma_k(i.tgt(), k)?;
                squares += 1;
                if !is_cat_pushout(&top, &i, &right, &bottom, &tests, self.cap())?
                    || !c.star_gamma_k(&i, k)?.is_iso()
                {
                    bad += 1;
                }
            }
            let e = c.endpoint(k).clone();
            let (_, gamma1) = c.gamma(e.src())?;
            let ee = cat.coproduct_map(&e, &e)?;
            let right = c.cyl_map(&e)?;
            let (_, gamma_v) = c.gamma(e.tgt())?;
            squares += 1;
            if !is_cat_pushout(&gamma1, &ee, &right, &gamma_v, &tests, self.cap())? || !c.star_gamma(&e)?.is_iso() {
                bad += 1;
            }
        }
        tally(bad, 0, format!("{squares} squares against {} test categories, {bad} failures", tests.len()))
    }

    fn cat_homotopy(&self) -> Checked {
        let c = standard::cat().cylinder;
        let cats = corpus::category_classes()?;
        let (mut pairs, mut functors, mut wrong) = (0, 0, 0);
        for (_, x) in &cats {
            let probe = c.probe(x)?;
            for (_, y) in &cats {
                let fs = enumerate_functors(x, y, self.cap())?;
                for f in &fs {
                    functors += 1;
                    if c.is_homotopy_equivalence(f)?.is_some() != f.is_equivalence() {
                        wrong += 1;
                    }
                    for g in &fs {
                        pairs += 1;
                        if probe.homotopic(f, g)?.is_some() != closed_form::cat_homotopic(f, g, self.cap())? {
                            wrong += 1;
                        }
                    }
                }
            }
        }
        tally(
            wrong,
            0,
            format!("{} categories, {functors} functors, {pairs} pairs, {wrong} mismatches", cats.len()),
        )
    }
}

/// Full, and every element is isomorphic to one in the image.
fn preorder_equivalence(f: &RelMap) -> bool {
    let y = f.tgt();
    f.is_full()
        && (0..y.size()).all(|b| {
            f.assign()
                .iter()
                .any(|&fa| y.related(fa, b) && y.related(b, fa))
        })
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> RelObject {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    RelObject::new(Flavor::Graph, n, &edges).expect("symmetric edges")
}

/// The square `f; h = g; k` is a pushout, tested against every cocone into
/// the test categories.
fn is_cat_pushout(
    f: &CatFunctor,
    g: &CatFunctor,
    h: &CatFunctor,
    k: &CatFunctor,
    tests: &[FinCategory],
    cap: u64,
) -> Result<bool, Error> {
    if f.then(h)? != g.then(k)? {
        return Ok(false);
    }
    for z in tests {
        let outs = enumerate_functors(h.tgt(), z, cap)?;
        for u in enumerate_functors(f.tgt(), z, cap)? {
            for w in enumerate_functors(g.tgt(), z, cap)? {
                if f.then(&u)? != g.then(&w)? {
                    continue;
                }
                let mut mediators = 0;
                for m in &outs {
                    if h.then(m)? == u && k.then(m)? == w {
                        mediators += 1;
                    }
                }
                if mediators != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
