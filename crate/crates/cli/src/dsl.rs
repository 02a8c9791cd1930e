//! The workspace description language. The grammar is in `docs/dsl.md`.
//!
//! Names are symbolic; elements, objects and arrows get indices in the
//! order they are declared.

use std::fmt;

use wfs_core::fincat::{CatFunctor, CatPresentation, FinCategory, PushoutBound, Word};
use wfs_core::{Arrow, CofibrationClass, Flavor, RelMap, RelObject};

use crate::workspace::{CatLabels, Object, Workspace, WorkspaceError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Semi,
    Comma,
    Eq,
    Dot,
    Arrow,
    Dash,
    Le,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Dash => f.write_str("`-`"),
            Tok::Le => f.write_str("`<=`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

pub fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, col: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.col = 1;
        } else {
            pos.col += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            advance(c, &mut pos);
            chars.next();
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                advance(c, &mut pos);
                chars.next();
            }
            continue;
        }
        if is_ident_char(c) {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| is_ident_char(**c)) {
                s.push(c);
                advance(c, &mut pos);
                chars.next();
            }
            out.push((Tok::Ident(s), start));
            continue;
        }
        chars.next();
        advance(c, &mut pos);
        let tok = match c {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ':' => Tok::Colon,
            ';' => Tok::Semi,
            ',' => Tok::Comma,
            '=' => Tok::Eq,
            '.' => Tok::Dot,
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                advance('>', &mut pos);
                Tok::Arrow
            }
            '-' => Tok::Dash,
            '<' if chars.peek() == Some(&'=') => {
                chars.next();
                advance('=', &mut pos);
                Tok::Le
            }
            other => return err(start, format!("unexpected character `{other}`")),
        };
        out.push((tok, start));
    }
    out.push((Tok::End, pos));
    Ok(out)
}

/// A path of arrow names, or the identity of an object.
#[derive(Clone, Debug)]
enum Path {
    Id(String, Pos),
    Arrows(Vec<(String, Pos)>),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    ws: Workspace,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, ParseError> {
        let (found, pos) = self.next();
        if found == tok {
            Ok(pos)
        } else {
            err(pos, format!("expected {tok}, found {found}"))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), ParseError> {
        match self.next() {
            (Tok::Ident(s), pos) => Ok((s, pos)),
            (found, pos) => err(pos, format!("expected a name, found {found}")),
        }
    }

    fn keyword(&mut self, options: &[&str]) -> Result<(String, Pos), ParseError> {
        let (word, pos) = self.ident()?;
        if options.contains(&word.as_str()) {
            Ok((word, pos))
        } else {
            err(pos, format!("expected one of {}, found `{word}`", options.join(", ")))
        }
    }

    fn at_ident(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_))
    }

    /// Ends a field: `;` or the closing brace (left in place).
    fn end_field(&mut self) -> Result<(), ParseError> {
        if self.eat(&Tok::Semi) || self.peek() == &Tok::RBrace {
            Ok(())
        } else {
            let (found, pos) = self.next();
            err(pos, format!("expected `;` or `}}`, found {found}"))
        }
    }

    fn names(&mut self) -> Result<Vec<(String, Pos)>, ParseError> {
        let mut out = Vec::new();
        while self.at_ident() {
            out.push(self.ident()?);
            self.eat(&Tok::Comma);
        }
        Ok(out)
    }

    fn path(&mut self) -> Result<Path, ParseError> {
        let (first, pos) = self.ident()?;
        if first == "id" && self.peek() == &Tok::LParen {
            self.next();
            let (x, xpos) = self.ident()?;
            self.expect(Tok::RParen)?;
            return Ok(Path::Id(x, xpos));
        }
        let mut arrows = vec![(first, pos)];
        while self.eat(&Tok::Dot) {
            arrows.push(self.ident()?);
        }
        Ok(Path::Arrows(arrows))
    }

    fn ws_err(pos: Pos) -> impl Fn(WorkspaceError) -> ParseError {
        move |e| ParseError {
            pos,
            message: e.to_string(),
        }
    }

    fn document(mut self) -> Result<Workspace, ParseError> {
        while self.peek() != &Tok::End {
            let (kind, pos) = self.ident()?;
            match kind.as_str() {
                "cat" => self.cat_decl()?,
                "map" => self.map_decl()?,
                "cylinder" => self.cylinder_decl()?,
                "genset" => self.genset_decl()?,
                other => match Flavor::parse(other) {
                    Some(flavor) => self.rel_decl(flavor)?,
                    None => {
                        return err(
                            pos,
                            format!("expected a declaration (set, graph, preord, ord, eqrel, cat, map, cylinder, genset), found `{other}`"),
                        )
                    }
                },
            }
        }
        Ok(self.ws)
    }

    fn fresh_name(&mut self) -> Result<(String, Pos), ParseError> {
        let (name, pos) = self.ident()?;
        if self.ws.contains(&name) {
            return err(pos, format!("`{name}` is declared twice"));
        }
        Ok((name, pos))
    }

    fn rel_decl(&mut self, flavor: Flavor) -> Result<(), ParseError> {
        let (name, pos) = self.fresh_name()?;
        self.expect(Tok::LBrace)?;
        let mut elements: Vec<String> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let (field, _) = self.keyword(&["vertices", "elements", "edges", "relations"])?;
            self.expect(Tok::Colon)?;
            match field.as_str() {
                "vertices" | "elements" => {
                    for (e, epos) in self.names()? {
                        if elements.contains(&e) {
                            return err(epos, format!("element `{e}` is declared twice"));
                        }
                        elements.push(e);
                    }
                }
                _ => {
                    while self.at_ident() {
                        let (a, apos) = self.ident()?;
                        let (sep, spos) = self.next();
                        let symmetric = match sep {
                            Tok::Dash => true,
                            Tok::Le => false,
                            found => return err(spos, format!("expected `-` or `<=`, found {found}")),
                        };
                        if symmetric != flavor.symmetric() {
                            let want = if flavor.symmetric() { "-" } else { "<=" };
                            return err(spos, format!("{flavor} pairs are written with `{want}`"));
                        }
                        let (b, bpos) = self.ident()?;
                        let lookup = |n: &str, p: Pos| {
                            elements.iter().position(|e| e == n).ok_or(ParseError {
                                pos: p,
                                message: format!("unknown element `{n}` of `{name}`"),
                            })
                        };
                        pairs.push((lookup(&a, apos)?, lookup(&b, bpos)?));
                        self.eat(&Tok::Comma);
                    }
                }
            }
            self.end_field()?;
        }
        let value = RelObject::new(flavor, elements.len(), &pairs).map_err(|e| ParseError {
            pos,
            message: format!("`{name}`: {e}"),
        })?;
        self.ws
            .add_object(&name, Object::Rel { value, elements })
            .map_err(Self::ws_err(pos))
    }

    fn cat_decl(&mut self) -> Result<(), ParseError> {
        let (name, pos) = self.fresh_name()?;
        self.expect(Tok::LBrace)?;
        let mut objects: Vec<String> = Vec::new();
        let mut gens: Vec<(String, usize, usize)> = Vec::new();
        let mut equations: Vec<(Path, Path, Pos)> = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let (field, _) = self.keyword(&["objects", "arrows", "relations"])?;
            self.expect(Tok::Colon)?;
            match field.as_str() {
                "objects" => {
                    for (o, opos) in self.names()? {
                        if objects.contains(&o) {
                            return err(opos, format!("object `{o}` is declared twice"));
                        }
                        objects.push(o);
                    }
                }
                "arrows" => {
                    while self.at_ident() {
                        let (a, apos) = self.ident()?;
                        if a == "id" || gens.iter().any(|g| g.0 == a) {
                            return err(apos, format!("arrow name `{a}` is reserved or declared twice"));
                        }
                        self.expect(Tok::Colon)?;
                        let (s, spos) = self.ident()?;
                        self.expect(Tok::Arrow)?;
                        let (t, tpos) = self.ident()?;
                        let find = |n: &str, p: Pos| {
                            objects.iter().position(|o| o == n).ok_or(ParseError {
                                pos: p,
                                message: format!("unknown object `{n}` of `{name}`"),
                            })
                        };
                        gens.push((a, find(&s, spos)?, find(&t, tpos)?));
                        self.eat(&Tok::Comma);
                    }
                }
                _ => {
                    while self.at_ident() {
                        let epos = self.pos();
                        let lhs = self.path()?;
                        self.expect(Tok::Eq)?;
                        let rhs = self.path()?;
                        equations.push((lhs, rhs, epos));
                        self.eat(&Tok::Comma);
                    }
                }
            }
            self.end_field()?;
        }
        let mut pres = CatPresentation::new(objects.len());
        for (_, s, t) in &gens {
            pres.add_generator(*s, *t).map_err(|e| ParseError {
                pos,
                message: e.to_string(),
            })?;
        }
        let word = |p: &Path| -> Result<Word, ParseError> {
            match p {
                Path::Id(x, xpos) => match objects.iter().position(|o| o == x) {
                    Some(src) => Ok(Word { src, gens: vec![] }),
                    None => err(*xpos, format!("unknown object `{x}` of `{name}`")),
                },
                Path::Arrows(names) => {
                    let mut ids = Vec::new();
                    for (a, apos) in names {
                        match gens.iter().position(|g| &g.0 == a) {
                            Some(i) => ids.push(i),
                            None => return err(*apos, format!("unknown arrow `{a}` of `{name}`")),
                        }
                    }
                    Ok(Word {
                        src: gens[ids[0]].1,
                        gens: ids,
                    })
                }
            }
        };
        for (lhs, rhs, epos) in &equations {
            pres.add_relation(word(lhs)?, word(rhs)?)
                .map_err(|e| ParseError {
                    pos: *epos,
                    message: e.to_string(),
                })?;
        }
        let presented = pres.build(PushoutBound::default()).map_err(|e| ParseError {
            pos,
            message: format!("`{name}`: {e}"),
        })?;
        let c = presented.category;
        let mut arrows: Vec<Option<String>> = vec![None; c.n_arrows()];
        for (x, slot) in arrows.iter_mut().enumerate().take(c.n_obj()) {
            *slot = Some(format!("id({})", objects[x]));
        }
        for (g, &a) in presented.generator_arrows.iter().enumerate() {
            if arrows[a].is_none() {
                arrows[a] = Some(gens[g].0.clone());
            }
        }
        let mut words = vec![Vec::new(); c.n_arrows()];
        for a in c.n_obj()..c.n_arrows() {
            if arrows[a].is_some() {
                words[a] = vec![a];
                continue;
            }
            let path: Vec<usize> = presented.words[a]
                .gens
                .iter()
                .map(|&g| presented.generator_arrows[g])
                .filter(|&b| b >= c.n_obj())
                .collect();
            arrows[a] = Some(
                path.iter()
                    .map(|&b| arrows[b].clone().expect("generator named"))
                    .collect::<Vec<_>>()
                    .join("."),
            );
            words[a] = path;
        }
        let labels = CatLabels {
            objects,
            arrows: arrows.into_iter().map(|a| a.expect("every arrow named")).collect(),
            words,
        };
        self.ws
            .add_object(&name, Object::Cat { value: c, labels })
            .map_err(Self::ws_err(pos))
    }

    fn map_decl(&mut self) -> Result<(), ParseError> {
        let (name, pos) = self.fresh_name()?;
        self.expect(Tok::Colon)?;
        let (src, spos) = self.ident()?;
        self.expect(Tok::Arrow)?;
        let (tgt, tpos) = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut entries: Vec<((String, Pos), Path)> = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let from = self.ident()?;
            self.expect(Tok::Arrow)?;
            let to = self.path()?;
            entries.push((from, to));
            self.eat(&Tok::Comma);
            self.eat(&Tok::Semi);
        }
        let s = self.ws.object(&src).map_err(Self::ws_err(spos))?.object.clone();
        let t = self.ws.object(&tgt).map_err(Self::ws_err(tpos))?.object.clone();
        let arrow = match (&s, &t) {
            (
                Object::Rel {
                    value: sv,
                    elements: se,
                },
                Object::Rel {
                    value: tv,
                    elements: te,
                },
            ) => Arrow::Rel(rel_map(&name, pos, sv, se, tv, te, &entries)?),
            (
                Object::Cat {
                    value: sv,
                    labels: sl,
                },
                Object::Cat {
                    value: tv,
                    labels: tl,
                },
            ) => Arrow::Cat(functor(&name, pos, sv, sl, tv, tl, &entries)?),
            _ => {
                return err(
                    pos,
                    format!("map `{name}` joins a {} and a {}", s.kind(), t.kind()),
                )
            }
        };
        if let (Arrow::Rel(f), Object::Rel { .. }) = (&arrow, &s) {
            if f.src().flavor() != f.tgt().flavor() {
                return err(pos, format!("map `{name}` joins a {} and a {}", s.kind(), t.kind()));
            }
        }
        self.ws
            .add_map(&name, &src, &tgt, arrow)
            .map_err(Self::ws_err(pos))
    }

    fn cylinder_decl(&mut self) -> Result<(), ParseError> {
        let (name, pos) = self.fresh_name()?;
        self.expect(Tok::LBrace)?;
        let mut interval = None;
        let mut ends = None;
        let mut class = CofibrationClass::Monomorphisms;
        while !self.eat(&Tok::RBrace) {
            let (field, fpos) = self.keyword(&["interval", "endpoints", "class"])?;
            self.expect(Tok::Colon)?;
            match field.as_str() {
                "interval" => interval = Some(self.ident()?.0),
                "endpoints" => {
                    let e0 = self.ident()?.0;
                    self.eat(&Tok::Comma);
                    let e1 = self.ident()?.0;
                    ends = Some([e0, e1]);
                }
                _ => {
                    // class names may contain dashes
                    let mut word = self.ident()?.0;
                    while self.eat(&Tok::Dash) {
                        word.push('-');
                        word.push_str(&self.ident()?.0);
                    }
                    class = CofibrationClass::parse(&word)
                        .ok_or_else(|| ParseError {
                            pos: fpos,
                            message: format!(
                                "unknown cofibration class `{word}` (mono, injective-on-objects, all)"
                            ),
                        })?;
                }
            }
            self.end_field()?;
        }
        let Some(interval) = interval else {
            return err(pos, format!("cylinder `{name}` needs an interval"));
        };
        let Some([e0, e1]) = ends else {
            return err(pos, format!("cylinder `{name}` needs two endpoints"));
        };
        self.ws
            .add_cylinder(&name, &interval, [&e0, &e1], class)
            .map_err(Self::ws_err(pos))
    }

    fn genset_decl(&mut self) -> Result<(), ParseError> {
        let (name, pos) = self.fresh_name()?;
        self.expect(Tok::LBrace)?;
        let mut maps = Vec::new();
        for (m, mpos) in self.names()? {
            self.ws.map(&m).map_err(Self::ws_err(mpos))?;
            maps.push(m);
        }
        self.eat(&Tok::Semi);
        self.expect(Tok::RBrace)?;
        self.ws.add_genset(&name, maps).map_err(Self::ws_err(pos))
    }
}

fn rel_map(
    name: &str,
    pos: Pos,
    src: &RelObject,
    src_names: &[String],
    tgt: &RelObject,
    tgt_names: &[String],
    entries: &[((String, Pos), Path)],
) -> Result<RelMap, ParseError> {
    let mut assign: Vec<Option<usize>> = vec![None; src.size()];
    for ((from, fpos), to) in entries {
        let Some(a) = src_names.iter().position(|n| n == from) else {
            return err(*fpos, format!("unknown element `{from}` in map `{name}`"));
        };
        let (to, tpos) = match to {
            Path::Arrows(v) if v.len() == 1 => &v[0],
            Path::Arrows(v) => return err(v[0].1, "expected an element name"),
            Path::Id(_, p) => return err(*p, "expected an element name"),
        };
        let Some(b) = tgt_names.iter().position(|n| n == to) else {
            return err(*tpos, format!("unknown element `{to}` in map `{name}`"));
        };
        if assign[a].replace(b).is_some() {
            return err(*fpos, format!("`{from}` is mapped twice in `{name}`"));
        }
    }
    let assign = assign
        .into_iter()
        .enumerate()
        .map(|(a, b)| {
            b.ok_or_else(|| ParseError {
                pos,
                message: format!("map `{name}` leaves `{}` unassigned", src_names[a]),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    RelMap::new(src.clone(), tgt.clone(), assign).map_err(|e| ParseError {
        pos,
        message: format!("map `{name}`: {e}"),
    })
}

fn functor(
    name: &str,
    pos: Pos,
    src: &FinCategory,
    sl: &CatLabels,
    tgt: &FinCategory,
    tl: &CatLabels,
    entries: &[((String, Pos), Path)],
) -> Result<CatFunctor, ParseError> {
    let mut obj: Vec<Option<usize>> = vec![None; src.n_obj()];
    let mut gen: Vec<Option<usize>> = vec![None; src.n_arrows()];
    for ((from, fpos), to) in entries {
        if let Some(x) = sl.object(from) {
            let y = match to {
                Path::Arrows(v) if v.len() == 1 => match tl.object(&v[0].0) {
                    Some(y) => y,
                    None => return err(v[0].1, format!("unknown object `{}` in map `{name}`", v[0].0)),
                },
                _ => return err(*fpos, format!("object `{from}` must map to an object")),
            };
            if obj[x].replace(y).is_some() {
                return err(*fpos, format!("`{from}` is mapped twice in `{name}`"));
            }
            continue;
        }
        let Some(a) = sl.arrow(from).filter(|&a| sl.is_generator(a)) else {
            return err(*fpos, format!("`{from}` is not an object or generating arrow of the source of `{name}`"));
        };
        let b = resolve_path(tgt, tl, to, name)?;
        if gen[a].replace(b).is_some() {
            return err(*fpos, format!("`{from}` is mapped twice in `{name}`"));
        }
    }
    let obj = obj
        .into_iter()
        .enumerate()
        .map(|(x, y)| {
            y.ok_or_else(|| ParseError {
                pos,
                message: format!("map `{name}` leaves object `{}` unassigned", sl.objects[x]),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut arr = Vec::with_capacity(src.n_arrows());
    for a in 0..src.n_arrows() {
        let mut image = obj[src.src(a)];
        for &g in &sl.words[a] {
            let Some(b) = gen[g] else {
                return err(pos, format!("map `{name}` leaves arrow `{}` unassigned", sl.arrows[g]));
            };
            image = tgt.try_then(image, b).ok_or_else(|| ParseError {
                pos,
                message: format!("map `{name}` does not preserve the endpoints of `{}`", sl.arrows[g]),
            })?;
        }
        arr.push(image);
    }
    CatFunctor::new(src.clone(), tgt.clone(), obj, arr).map_err(|e| ParseError {
        pos,
        message: format!("map `{name}`: {e}"),
    })
}

fn resolve_path(c: &FinCategory, labels: &CatLabels, path: &Path, name: &str) -> Result<usize, ParseError> {
    match path {
        Path::Id(x, p) => match labels.object(x) {
            Some(x) => Ok(x),
            None => err(*p, format!("unknown object `{x}` in map `{name}`")),
        },
        Path::Arrows(v) => {
            let mut at: Option<usize> = None;
            for (a, p) in v {
                let Some(b) = labels.arrow(a) else {
                    return err(*p, format!("unknown arrow `{a}` in map `{name}`"));
                };
                at = Some(match at {
                    None => b,
                    Some(prev) => c.try_then(prev, b).ok_or_else(|| ParseError {
                        pos: *p,
                        message: format!("path through `{a}` is not composable"),
                    })?,
                });
            }
            Ok(at.expect("paths are nonempty"))
        }
    }
}

pub fn parse_document(text: &str) -> Result<Workspace, ParseError> {
    let toks = lex(text)?;
    Parser {
        toks,
        at: 0,
        ws: Workspace::new(),
    }
    .document()
}

/// Parses `text` on top of an existing workspace.
pub fn extend(ws: &Workspace, text: &str) -> Result<Workspace, ParseError> {
    let toks = lex(text)?;
    Parser {
        toks,
        at: 0,
        ws: ws.clone(),
    }
    .document()
}

// Emission.

pub fn emit_object(name: &str, object: &Object) -> String {
    match object {
        Object::Rel { value, elements } => {
            let flavor = value.flavor();
            let (carrier, relation) = if flavor == Flavor::Graph {
                ("vertices", "edges")
            } else {
                ("elements", "relations")
            };
            let mut out = format!("{flavor} {name} {{ {carrier}: {}", elements.join(" "));
            let pairs: Vec<String> = value
                .pairs()
                .filter(|&(a, b)| !flavor.symmetric() || a < b)
                .map(|(a, b)| {
                    let sep = if flavor.symmetric() { "-" } else { "<=" };
                    format!("{}{sep}{}", elements[a], elements[b])
                })
                .collect();
            if !pairs.is_empty() {
                out.push_str(&format!("; {relation}: "));
                out.push_str(&pairs.join(" "));
            }
            out.push_str(" }");
            out
        }
        Object::Cat { value, labels } => {
            let mut out = format!("cat {name} {{ objects: {}", labels.objects.join(" "));
            let gens: Vec<usize> = (value.n_obj()..value.n_arrows())
                .filter(|&a| labels.is_generator(a))
                .collect();
            if !gens.is_empty() {
                let decls: Vec<String> = gens
                    .iter()
                    .map(|&a| {
                        format!(
                            "{}: {} -> {}",
                            labels.arrows[a],
                            labels.objects[value.src(a)],
                            labels.objects[value.tgt(a)]
                        )
                    })
                    .collect();
                out.push_str("; arrows: ");
                out.push_str(&decls.join(", "));
            }
            let mut eqs = Vec::new();
            for f in value.non_identities() {
                for g in value.arrows_from(value.tgt(f)) {
                    if value.is_identity(g) {
                        continue;
                    }
                    let h = value.then(f, g);
                    // `f.g` already names `h` when `h` is that path
                    if labels.words[h].len() == labels.words[f].len() + labels.words[g].len()
                        && labels.words[h].starts_with(&labels.words[f])
                        && labels.words[h].ends_with(&labels.words[g])
                    {
                        continue;
                    }
                    eqs.push(format!(
                        "{}.{} = {}",
                        labels.arrows[f], labels.arrows[g], labels.arrows[h]
                    ));
                }
            }
            if !eqs.is_empty() {
                out.push_str("; relations: ");
                out.push_str(&eqs.join(", "));
            }
            out.push_str(" }");
            out
        }
    }
}

/// The body of a map declaration, with names taken from the endpoint labels.
pub fn emit_map(name: &str, src: &str, tgt: &str, arrow: &Arrow, s: &Object, t: &Object) -> String {
    let entries: Vec<String> = match (arrow, s, t) {
        (Arrow::Rel(f), Object::Rel { elements: se, .. }, Object::Rel { elements: te, .. }) => f
            .assign()
            .iter()
            .enumerate()
            .map(|(a, &b)| format!("{}->{}", se[a], te[b]))
            .collect(),
        (Arrow::Cat(f), Object::Cat { labels: sl, .. }, Object::Cat { labels: tl, .. }) => {
            let objs = (0..f.src().n_obj()).map(|x| format!("{}->{}", sl.objects[x], tl.objects[f.on_obj(x)]));
            let arrows = (f.src().n_obj()..f.src().n_arrows())
                .filter(|&a| sl.is_generator(a))
                .map(|a| format!("{}->{}", sl.arrows[a], tl.arrows[f.on_arr(a)]));
            objs.chain(arrows).collect()
        }
        _ => unreachable!("workspace maps join objects of their own kind"),
    };
    format!("map {name} : {src} -> {tgt} {{ {} }}", entries.join(" "))
}

/// Normal form of a workspace: objects, then maps, cylinders and generator
/// sets, each in declaration order.
pub fn emit(ws: &Workspace) -> String {
    let mut out = String::new();
    for e in &ws.objects {
        out.push_str(&emit_object(&e.name, &e.object));
        out.push('\n');
    }
    for m in &ws.maps {
        let s = &ws.object(&m.src).expect("resolved").object;
        let t = &ws.object(&m.tgt).expect("resolved").object;
        out.push_str(&emit_map(&m.name, &m.src, &m.tgt, &m.arrow, s, t));
        out.push('\n');
    }
    for c in &ws.cylinders {
        out.push_str(&format!(
            "cylinder {} {{ interval: {}; endpoints: {} {}; class: {} }}\n",
            c.name,
            c.interval,
            c.endpoints[0],
            c.endpoints[1],
            c.class.name()
        ));
    }
    for g in &ws.gensets {
        out.push_str(&format!("genset {} {{ {} }}\n", g.name, g.maps.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document() {
        assert!(parse_document("").unwrap().is_empty());
        assert!(parse_document("  # nothing here\n").unwrap().is_empty());
    }

    #[test]
    fn graph_declaration() {
        let ws = parse_document("graph X { vertices: a b c; edges: a-b b-c }").unwrap();
        let Object::Rel { value, elements } = &ws.object("X").unwrap().object else {
            panic!("relational object expected")
        };
        assert_eq!(elements, &["a", "b", "c"]);
        assert_eq!(value, &RelObject::new(Flavor::Graph, 3, &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn k4_minus_declaration() {
        let text = "graph K4m { vertices: a b c d; edges: a-c a-d b-c b-d c-d }";
        let ws = parse_document(text).unwrap();
        let Object::Rel { value, .. } = &ws.object("K4m").unwrap().object else {
            panic!("relational object expected")
        };
        let expected = RelObject::complete_minus_edge(4);
        assert!(wfs_core::finrel::iso_search(value, &expected, 1_000_000)
            .unwrap()
            .is_some());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_document("graph X {\n  vertices: a b;\n  edges: a-c\n}").unwrap_err();
        assert_eq!(e.pos, Pos { line: 3, col: 12 });
        let e = parse_document("graph X { vertices: a; }\ngraph X { }").unwrap_err();
        assert_eq!(e.pos.line, 2);
        let e = parse_document("preord P { elements: a b; relations: a-b }").unwrap_err();
        assert!(e.message.contains("<="), "{e}");
        let e = parse_document("ord P { elements: a b; relations: a<=b b<=a }").unwrap_err();
        assert!(e.message.contains("antisymmetry"), "{e}");
        let e = parse_document("map f : X -> Y { }").unwrap_err();
        assert!(e.message.contains("unknown object `X`"), "{e}");
        let e = parse_document("graph X { vertices: a } %").unwrap_err();
        assert_eq!(e.pos, Pos { line: 1, col: 25 });
    }

    #[test]
    fn maps_must_preserve_relations() {
        let doc = "graph X { vertices: a b; edges: a-b }\ngraph Y { vertices: u v }\nmap f : X -> Y { a->u b->v }";
        let e = parse_document(doc).unwrap_err();
        assert_eq!(e.pos.line, 3);
        assert!(e.message.contains("does not preserve"), "{e}");
    }

    #[test]
    fn walking_isomorphism() {
        let doc = "cat I { objects: x y; arrows: f: x -> y, g: y -> x; relations: f.g = id(x), g.f = id(y) }";
        let ws = parse_document(doc).unwrap();
        let Object::Cat { value, .. } = &ws.object("I").unwrap().object else {
            panic!("category expected")
        };
        assert!(wfs_core::fincat::isomorphisms(value, &FinCategory::indiscrete(2), 1_000_000)
            .unwrap()
            .len()
            == 2);
    }

    #[test]
    fn functor_from_generators() {
        let doc = "cat C { objects: x y z; arrows: f: x -> y, g: y -> z }\n\
                   cat D { objects: p; arrows: e: p -> p; relations: e.e = e }\n\
                   map F : C -> D { x->p y->p z->p f->e g->id(p) }";
        let ws = parse_document(doc).unwrap();
        let Arrow::Cat(f) = &ws.map("F").unwrap().arrow else {
            panic!("functor expected")
        };
        // the composite f.g goes to e
        let Object::Cat { labels, .. } = &ws.object("C").unwrap().object else {
            panic!("category expected")
        };
        let fg = labels.arrow("f.g").unwrap();
        let Object::Cat { labels: dl, .. } = &ws.object("D").unwrap().object else {
            panic!("category expected")
        };
        assert_eq!(f.on_arr(fg), dl.arrow("e").unwrap());
    }

    #[test]
    fn cylinder_and_genset() {
        let doc = "graph K2 { vertices: a b; edges: a-b }\n\
                   graph two { vertices: a b }\n\
                   map i : two -> K2 { a->a b->b }\n\
                   cylinder C { interval: K2; endpoints: a b; class: mono }\n\
                   genset I { i }";
        let ws = parse_document(doc).unwrap();
        assert_eq!(ws.genset_maps("I").unwrap().len(), 1);
        assert!(matches!(ws.cylinder("C").unwrap().cylinder, crate::workspace::AnyCylinder::Rel(_)));
        let e = parse_document("genset I { nope }").unwrap_err();
        assert!(e.message.contains("unknown map `nope`"), "{e}");
    }

    #[test]
    fn emission_reparses_to_the_same_normal_form() {
        let doc = "graph K2 { vertices: a b; edges: a-b }\n\
                   preord P { elements: a b c; relations: a<=b b<=c }\n\
                   cat C { objects: x y; arrows: f: x -> y, g: x -> y }\n\
                   cat D { objects: u v; arrows: h: u -> v }\n\
                   map F : C -> D { x->u y->v f->h g->h }\n\
                   cylinder Z { interval: K2; endpoints: a b }";
        let once = emit(&parse_document(doc).unwrap());
        let twice = emit(&parse_document(&once).unwrap());
        assert_eq!(once, twice);
    }
}
