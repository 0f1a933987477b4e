//! Line-oriented poset file format.
//!
//! ```text
//! # comment
//! poset fig2
//! elements 0 a b c d 1
//! bottom 0
//! top 1
//! cover 0 a
//! comp a d
//! ```
//!
//! `cover a b` states `a ≤ b` (the order is the reflexive-transitive
//! closure of all cover lines); `comp a b` states `a' = b` and, when
//! present, must cover every element exactly once.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{PosetError, Result};
use crate::poset::{FinitePoset, UnaryMap};

fn perr(line: usize, message: impl Into<String>) -> PosetError {
    PosetError::Parse { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<FinitePoset> {
    let mut name: Option<String> = None;
    let mut elements: Option<(usize, Vec<String>)> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut bounds: Vec<(usize, &'static str, usize)> = Vec::new();
    let mut covers: Vec<(usize, usize)> = Vec::new();
    let mut last_cover_line = 0;
    let mut comp: Vec<Option<usize>> = Vec::new();
    let mut last_comp_line = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut words = trimmed.split_whitespace();
        let keyword = words.next().expect("non-empty line");
        let args: Vec<&str> = words.collect();
        if name.is_none() {
            if keyword != "poset" || args.len() != 1 {
                return Err(perr(line, "expected `poset <name>` header"));
            }
            name = Some(args[0].to_string());
            continue;
        }
        if keyword != "elements" && elements.is_none() {
            return Err(perr(line, format!("`{keyword}` before `elements`")));
        }
        let lookup = |index: &HashMap<String, usize>, e: &str| {
            index.get(e).copied().ok_or_else(|| perr(line, format!("unknown element `{e}`")))
        };
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(perr(line, format!("`{keyword}` takes {k} argument(s), got {}", args.len())))
            }
        };
        match keyword {
            "poset" => return Err(perr(line, "duplicate `poset` header")),
            "elements" => {
                if elements.is_some() {
                    return Err(perr(line, "duplicate `elements` line"));
                }
                let names: Vec<String> = args.iter().map(|s| s.to_string()).collect();
                for (k, e) in names.iter().enumerate() {
                    if index.insert(e.clone(), k).is_some() {
                        return Err(perr(line, format!("duplicate element `{e}`")));
                    }
                }
                comp = vec![None; names.len()];
                elements = Some((line, names));
            }
            "bottom" | "top" => {
                arity(1)?;
                let which = if keyword == "bottom" { "bottom" } else { "top" };
                if bounds.iter().any(|&(_, w, _)| w == which) {
                    return Err(perr(line, format!("duplicate `{which}` line")));
                }
                bounds.push((line, which, lookup(&index, args[0])?));
            }
            "cover" => {
                arity(2)?;
                covers.push((lookup(&index, args[0])?, lookup(&index, args[1])?));
                last_cover_line = line;
            }
            "comp" => {
                arity(2)?;
                let (a, b) = (lookup(&index, args[0])?, lookup(&index, args[1])?);
                if comp[a].replace(b).is_some() {
                    return Err(perr(line, format!("`{}` has two images", args[0])));
                }
                last_comp_line = Some(line);
            }
            other => return Err(perr(line, format!("unknown keyword `{other}`"))),
        }
    }

    let name = name.ok_or_else(|| perr(1, "missing `poset <name>` header"))?;
    let (elements_line, names) = elements.ok_or_else(|| perr(1, "missing `elements` line"))?;
    let mut poset = FinitePoset::from_indices(&name, names, &covers).map_err(|e| match e {
        PosetError::CycleDetected(..) => perr(last_cover_line, e.to_string()),
        other => perr(elements_line, other.to_string()),
    })?;
    for (line, which, declared) in bounds {
        let actual = if which == "bottom" { poset.bottom() } else { poset.top() };
        if actual != Some(declared) {
            let err = PosetError::BoundMismatch { which, declared: poset.name_of(declared).to_string() };
            return Err(perr(line, err.to_string()));
        }
    }
    if let Some(line) = last_comp_line {
        let image = comp
            .iter()
            .enumerate()
            .map(|(x, y)| {
                y.ok_or_else(|| perr(line, format!("`comp` is not total: `{}` has no image", poset.name_of(x))))
            })
            .collect::<Result<Vec<_>>>()?;
        poset = poset.with_unary(UnaryMap::new(image)).map_err(|e| perr(line, e.to_string()))?;
    }
    Ok(poset)
}

/// Canonical text: covers only (transitive reduction), one `comp` line per element.
pub fn render(p: &FinitePoset) -> String {
    let mut out = String::new();
    writeln!(out, "poset {}", p.name()).unwrap();
    writeln!(out, "elements {}", p.names().join(" ")).unwrap();
    if let Some(b) = p.bottom() {
        writeln!(out, "bottom {}", p.name_of(b)).unwrap();
    }
    if let Some(t) = p.top() {
        writeln!(out, "top {}", p.name_of(t)).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(out, "cover {} {}", p.name_of(a), p.name_of(b)).unwrap();
    }
    if let Some(u) = p.unary() {
        for x in 0..p.len() {
            writeln!(out, "comp {} {}", p.name_of(x), p.name_of(u.apply(x))).unwrap();
        }
    }
    out
}
