//! `macro v1` fixture text.
//!
//! ```text
//! macro v1
//! name B-expand
//! kind B-expand
//! lhs shadow v=3 alpha=... region=0
//! rhs shadow v=5 alpha=... region=0,3,4
//! step A d1=1 d2=6
//! cert 4 reduced c4.1.2...
//! ```
//!
//! Steps and `cert` lines alternate in order; `#` starts a comment.

use std::fmt::Write as _;

use super::{CertEntry, MacroError, MacroTemplate, Tangle};
use crate::codes::{emit_mapcode, parse_mapcode};
use crate::moves::MoveStep;

fn emit_tangle(t: &Tangle) -> String {
    let region: Vec<String> = t.region.iter().map(|k| k.to_string()).collect();
    format!("{} region={}", emit_mapcode(&t.closure), region.join(","))
}

pub fn emit_macro(t: &MacroTemplate) -> String {
    let mut out = String::from("macro v1\n");
    writeln!(out, "name {}", t.name).unwrap();
    writeln!(out, "kind {}", t.kind).unwrap();
    writeln!(out, "lhs {}", emit_tangle(&t.lhs)).unwrap();
    writeln!(out, "rhs {}", emit_tangle(&t.rhs)).unwrap();
    for (step, c) in t.steps.iter().zip(&t.certificate) {
        writeln!(out, "step {step}").unwrap();
        let flag = if c.reduced { "reduced" } else { "reducible" };
        writeln!(out, "cert {} {} {}", c.crossings, flag, c.code).unwrap();
    }
    out
}

fn parse_tangle(text: &str, line: usize) -> Result<Tangle, MacroError> {
    let err = |message: String| MacroError::Format { line, message };
    let (code, region) = text
        .rsplit_once(" region=")
        .ok_or_else(|| err("expected ` region=`".into()))?;
    let closure = parse_mapcode(code).map_err(|e| err(e.to_string()))?;
    let region = if region.is_empty() {
        Vec::new()
    } else {
        region
            .split(',')
            .map(|k| k.parse().map_err(|_| err(format!("bad crossing `{k}`"))))
            .collect::<Result<_, _>>()?
    };
    Tangle::new(closure, region)
}

/// Parses one fixture. The certificate is read, not checked; see
/// [`super::verify_macro`].
pub fn parse_macro(text: &str) -> Result<MacroTemplate, MacroError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: &str| MacroError::Format {
        line,
        message: message.to_string(),
    };
    match lines.next() {
        Some((_, "macro v1")) => {}
        Some((i, _)) => return Err(err(i, "expected `macro v1`")),
        None => return Err(err(0, "empty fixture")),
    }
    let mut field = |key: &str| -> Result<(usize, String), MacroError> {
        match lines.next() {
            Some((i, l)) => l
                .strip_prefix(key)
                .and_then(|v| v.strip_prefix(' '))
                .map(|v| (i, v.to_string()))
                .ok_or_else(|| err(i, &format!("expected `{key}`"))),
            None => Err(err(0, &format!("missing `{key}`"))),
        }
    };
    let name = field("name")?.1;
    let kind = field("kind")?.1;
    let (li, lhs) = field("lhs")?;
    let lhs = parse_tangle(&lhs, li)?;
    let (ri, rhs) = field("rhs")?;
    let rhs = parse_tangle(&rhs, ri)?;
    let mut steps = Vec::new();
    let mut certificate = Vec::new();
    for (i, l) in lines {
        if let Some(s) = l.strip_prefix("step ") {
            steps.push(s.parse::<MoveStep>().map_err(|m| err(i, &m))?);
        } else if let Some(c) = l.strip_prefix("cert ") {
            let parts: Vec<&str> = c.split(' ').collect();
            if parts.len() != 3 {
                return Err(err(i, "expected `cert <n> <flag> <code>`"));
            }
            let crossings = parts[0].parse().map_err(|_| err(i, "bad crossing count"))?;
            let reduced = match parts[1] {
                "reduced" => true,
                "reducible" => false,
                _ => return Err(err(i, "expected `reduced` or `reducible`")),
            };
            let code = parts[2].parse().map_err(|m: String| err(i, &m))?;
            certificate.push(CertEntry { crossings, reduced, code });
        } else {
            return Err(err(i, "expected `step` or `cert`"));
        }
    }
    Ok(MacroTemplate {
        name,
        kind,
        lhs,
        rhs,
        steps,
        certificate,
    })
}
