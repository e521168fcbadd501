//! The group-spec grammar.
//!
//! ```text
//! type=A3xB2 pi1=<trivial|full|so-kernel|omega-kernel|mu(k)|gens:(v;v;...)> delta=(v) genus=g [twisted]
//! SL(n) | PGL(n) | Sp(2n) | PSp(2n) | Spin(n) | SO(n) | PSO(2n) | Omega(4n) | E6 | E7 | E8 | F4 | G2 | E6ad | E7ad
//!     [d=<int>|d=(v)] [twisted] [genus=g]
//! ```
//!
//! Elements are written in factor coordinates. A bare integer `d` is read in mixed
//! radix over the invariant factors (first coordinate least significant); for
//! presets with a nontrivial `π₁` it is read in the canonical coordinates of `π₁`.

use crate::error::{Error, Result};
use crate::finab::subgroup;
use crate::rootdata::{named_subgroup, product_center, DynkinType, Family, GroupSpec, Mode};

pub const MAX_RANK_ENV: &str = "MODULI_BRAUER_MAX_RANK";
pub const DEFAULT_MAX_RANK: usize = 64;

/// Options that come from outside the spec string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub genus: Option<u32>,
    pub allow_low_genus: bool,
    pub max_rank: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions { genus: None, allow_low_genus: false, max_rank: max_rank_from_env() }
    }
}

/// Rank cap from `MODULI_BRAUER_MAX_RANK`, default 64.
pub fn max_rank_from_env() -> usize {
    std::env::var(MAX_RANK_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_RANK)
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    pos: usize,
    text: &'a str,
}

fn tokenize(s: &str) -> Result<Vec<Token<'_>>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse { pos: i, msg: "unbalanced `)`".into() });
                }
            }
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if let Some(st) = start.take() {
                out.push(Token { pos: st, text: &s[st..i] });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if depth != 0 {
        return Err(Error::Parse { pos: s.len(), msg: "unbalanced `(`".into() });
    }
    if let Some(st) = start {
        out.push(Token { pos: st, text: &s[st..] });
    }
    Ok(out)
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn parse_int(pos: usize, s: &str) -> Result<i64> {
    s.trim().parse().map_err(|_| perr(pos, format!("expected an integer, found `{}`", s.trim())))
}

fn parse_vector(pos: usize, s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let inner = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s);
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner.split(',').map(|x| parse_int(pos, x)).collect()
}

fn parse_vectors(pos: usize, s: &str) -> Result<Vec<Vec<i64>>> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| perr(pos, "expected `(v;v;...)`"))?;
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner.split(';').map(|v| parse_vector(pos, v)).collect()
}

/// Digits of `d` in mixed radix over `moduli`, first coordinate least significant.
fn mixed_radix(d: i64, moduli: &[i64]) -> Vec<i64> {
    let total: i64 = moduli.iter().product();
    let mut rest = d.rem_euclid(total.max(1));
    moduli
        .iter()
        .map(|&m| {
            let x = rest % m;
            rest /= m;
            x
        })
        .collect()
}

enum Delta {
    Int(i64),
    Vector(Vec<i64>),
}

fn parse_delta(pos: usize, s: &str) -> Result<Delta> {
    if s.trim_start().starts_with('(') {
        Ok(Delta::Vector(parse_vector(pos, s)?))
    } else {
        Ok(Delta::Int(parse_int(pos, s)?))
    }
}

fn parse_types(pos: usize, s: &str, max_rank: usize) -> Result<Vec<DynkinType>> {
    s.split(['x', '×', '*'])
        .map(|part| {
            let t: DynkinType = part.parse().map_err(|e: Error| perr(pos, e.to_string()))?;
            if t.rank() > max_rank {
                return Err(Error::RankCap { rank: t.rank(), cap: max_rank });
            }
            Ok(t)
        })
        .collect()
}

struct Preset {
    factors: Vec<DynkinType>,
    /// Named subgroup of the single factor, `None` for twisted presets.
    pi1: Option<&'static str>,
}

fn ty(pos: usize, family: Family, rank: usize) -> Result<DynkinType> {
    DynkinType::new(family, rank).map_err(|e| perr(pos, e.to_string()))
}

fn preset(pos: usize, name: &str, arg: Option<i64>) -> Result<Option<Preset>> {
    use Family::*;
    let need = |what: &str| -> Result<usize> {
        match arg {
            Some(n) if n > 0 => Ok(n as usize),
            _ => Err(perr(pos, format!("{what} needs a positive argument"))),
        }
    };
    let twisted = |t| Ok(Some(Preset { factors: vec![t], pi1: None }));
    let quotient = |t, h| Ok(Some(Preset { factors: vec![t], pi1: Some(h) }));
    let even = |n: usize, what: &str| -> Result<usize> {
        if n.is_multiple_of(2) {
            Ok(n / 2)
        } else {
            Err(perr(pos, format!("{what} needs an even argument")))
        }
    };
    let upper = name.to_ascii_uppercase();
    match upper.as_str() {
        "SL" => {
            let n = need("SL")?;
            if n < 2 {
                return Err(perr(pos, "SL(n) needs n >= 2"));
            }
            twisted(ty(pos, A, n - 1)?)
        }
        "PGL" => {
            let n = need("PGL")?;
            if n < 2 {
                return Err(perr(pos, "PGL(n) needs n >= 2"));
            }
            quotient(ty(pos, A, n - 1)?, "full")
        }
        "SP" => match even(need("Sp")?, "Sp")? {
            1 => twisted(ty(pos, A, 1)?),
            n => twisted(ty(pos, C, n)?),
        },
        "PSP" => match even(need("PSp")?, "PSp")? {
            1 => quotient(ty(pos, A, 1)?, "full"),
            n => quotient(ty(pos, C, n)?, "full"),
        },
        "SPIN" | "SO" => {
            let n = need(name)?;
            if n < 5 {
                return Err(perr(pos, format!("{name}(n) needs n >= 5")));
            }
            let t = if n % 2 == 1 { ty(pos, B, (n - 1) / 2)? } else { ty(pos, D, n / 2)? };
            if upper == "SPIN" {
                twisted(t)
            } else {
                quotient(t, "so-kernel")
            }
        }
        "PSO" => {
            let n = even(need("PSO")?, "PSO")?;
            quotient(ty(pos, D, n)?, "full")
        }
        "OMEGA" => {
            let m = need("Omega")?;
            if m % 4 != 0 || m < 12 {
                return Err(perr(pos, "Omega(4n) needs 4n >= 12"));
            }
            quotient(ty(pos, D, m / 2)?, "omega-kernel")
        }
        "E6" | "E7" | "E8" | "F4" | "G2" if arg.is_none() => {
            let t: DynkinType = upper.parse()?;
            twisted(t)
        }
        "E6AD" | "E7AD" if arg.is_none() => {
            let t: DynkinType = upper[..2].parse()?;
            quotient(t, "full")
        }
        _ => Ok(None),
    }
}

fn split_call(s: &str) -> (&str, Option<&str>) {
    match s.find('(') {
        Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
        _ => (s, None),
    }
}

/// Parses a spec string with genus and rank options from the environment.
pub fn parse_group(s: &str) -> Result<GroupSpec> {
    parse_group_with(s, ParseOptions::default())
}

pub fn parse_group_with(s: &str, opts: ParseOptions) -> Result<GroupSpec> {
    let tokens = tokenize(s)?;
    let first = *tokens.first().ok_or_else(|| perr(0, "empty group spec"))?;

    let mut genus = None;
    let mut twisted = false;
    let mut allow_low = opts.allow_low_genus;
    let mut delta = None;
    let mut types = None;
    let mut pi1_src = None;
    let mut preset_spec = None;

    let (name, arg) = split_call(first.text);
    if !first.text.contains('=') {
        let arg = arg.map(|a| parse_int(first.pos + name.len() + 1, a)).transpose()?;
        match preset(first.pos, name, arg)? {
            Some(p) => preset_spec = Some(p),
            None => return Err(perr(first.pos, format!("unknown preset `{}`", first.text))),
        }
    }

    let rest = if preset_spec.is_some() { &tokens[1..] } else { &tokens[..] };
    for tok in rest {
        let (key, value) = match tok.text.split_once('=') {
            Some((k, v)) => (k.trim(), Some((tok.pos + k.len() + 1, v))),
            None => (tok.text, None),
        };
        match (key, value) {
            ("twisted", None) => twisted = true,
            ("allow-low-genus", None) => allow_low = true,
            ("genus", Some((p, v))) => {
                let g = parse_int(p, v)?;
                genus = Some(u32::try_from(g).map_err(|_| perr(p, "genus must be nonnegative"))?);
            }
            ("d" | "delta", Some((p, v))) => delta = Some((p, parse_delta(p, v)?)),
            ("type", Some((p, v))) if preset_spec.is_none() => types = Some(parse_types(p, v, opts.max_rank)?),
            ("pi1", Some((p, v))) if preset_spec.is_none() => pi1_src = Some((p, v)),
            _ => return Err(perr(tok.pos, format!("unexpected `{}`", tok.text))),
        }
    }

    let genus = match (genus, opts.genus) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Invalid(format!("genus given twice with different values ({a} and {b})")))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(perr(s.len(), "missing genus (use genus=<g> or --genus)")),
    };

    let (factors, pi1_gens, mode) = match preset_spec {
        Some(p) => {
            for t in &p.factors {
                if t.rank() > opts.max_rank {
                    return Err(Error::RankCap { rank: t.rank(), cap: opts.max_rank });
                }
            }
            match p.pi1 {
                None => (p.factors, vec![], Mode::TwistedSc),
                Some(_) if twisted => return Err(perr(first.pos, "`twisted` only applies to simply connected groups")),
                Some(h) => {
                    let gens = named_subgroup(p.factors[0], h)?;
                    (p.factors, gens, Mode::Component)
                }
            }
        }
        None => {
            let factors = types.ok_or_else(|| perr(0, "missing `type=`"))?;
            let gens = match pi1_src {
                None => vec![],
                Some((p, v)) => pi1_generators(p, &factors, v)?,
            };
            let mode = if twisted { Mode::TwistedSc } else { Mode::Component };
            (factors, gens, mode)
        }
    };

    let pc = product_center(&factors);
    let moduli: Vec<i64> = pc.blocks.iter().flat_map(|b| b.group.invariant_factors().iter().copied()).collect();
    let delta = match delta {
        None => vec![0; moduli.len()],
        Some((_, Delta::Vector(v))) => v,
        Some((_, Delta::Int(d))) if mode == Mode::Component && !pi1_gens.is_empty() => {
            // read in canonical coordinates of π₁
            let canon = pi1_gens.iter().map(|g| pc.to_canonical(g)).collect::<Result<Vec<_>>>()?;
            let (h, incl) = subgroup(&pc.data.group, &canon)?;
            let x = mixed_radix(d, h.invariant_factors());
            pc.to_factor_coords(&incl.apply(&x))
        }
        Some((_, Delta::Int(d))) => mixed_radix(d, &moduli),
    };
    GroupSpec::new(factors, pi1_gens, delta, genus, mode, allow_low)
}

fn pi1_generators(pos: usize, factors: &[DynkinType], v: &str) -> Result<Vec<Vec<i64>>> {
    let v = v.trim();
    if let Some(g) = v.strip_prefix("gens:") {
        return parse_vectors(pos + 5, g);
    }
    match (v, factors) {
        ("trivial", _) => Ok(vec![]),
        ("full", _) => {
            let pc = product_center(factors);
            Ok((0..pc.coords_len())
                .map(|i| {
                    let mut e = vec![0; pc.coords_len()];
                    e[i] = 1;
                    e
                })
                .collect())
        }
        (name, [t]) => named_subgroup(*t, name).map_err(|e| perr(pos, e.to_string())),
        (name, _) => Err(perr(pos, format!("subgroup `{name}` needs a single simple factor"))),
    }
}

fn render_vector(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// Canonical raw-grammar form of `spec`; [`parse_group`] reads it back to an equal spec.
pub fn render(spec: &GroupSpec) -> String {
    let types = spec.factors().iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x");
    let gens =
        spec.pi1_gens().iter().map(|g| render_vector(g).trim_matches(['(', ')']).to_string()).collect::<Vec<_>>();
    let mut out = format!("type={types}");
    if spec.mode() == Mode::Component {
        out.push_str(&format!(" pi1=gens:({})", gens.join(";")));
    }
    out.push_str(&format!(" delta={} genus={}", render_vector(spec.delta()), spec.genus()));
    if spec.mode() == Mode::TwistedSc {
        out.push_str(" twisted");
    }
    if spec.allow_low_genus() {
        out.push_str(" allow-low-genus");
    }
    out
}
