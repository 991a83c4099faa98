//! Text formats for shadows.
//!
//! Map code: `shadow v=<n> alpha=<a-b,...>`, the `2n` pairs of `alpha`
//! listed with the smaller dart first, sorted by that dart. The trivial
//! projection is `shadow v=0`.
//!
//! Signed Gauss code: `gauss: t1 t2 ... t2n`, each token `<label><sign>`.
//! Labels `1..=n` each appear twice with the same sign. The trivial
//! projection is `gauss: -`.
//!
//! Sign convention: walking the curve, the first visit to a crossing arrives
//! through position 0 and leaves through position 2; the second visit
//! arrives through position 1 (the frame of first and second direction turns
//! counterclockwise) or position 3 (clockwise). The sign is that frame
//! orientation multiplied by the checkerboard colour of the face on the left
//! of the first passage, which alternates with each visit: `+` means
//! counterclockwise when the first visit is at an even position of the word
//! and clockwise when it is at an odd one. Under this convention every
//! alternating word such as `1+ 2+ 3+ 1+ 2+ 3+` has uniform signs.

use thiserror::Error;

use crate::shadow::{opposite, vertex, Dart, Shadow, ShadowError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("syntax error at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("label {label} occurs {count} times")]
    LabelCountError { label: usize, count: usize },
    #[error("label {0} carries different signs")]
    SignMismatch(usize),
    #[error(transparent)]
    Invalid(#[from] ShadowError),
}

impl CodeError {
    /// Name of the error variant, used for CLI diagnostics.
    pub fn name(&self) -> String {
        match self {
            CodeError::SyntaxError { .. } => "SyntaxError".into(),
            CodeError::LabelCountError { .. } => "LabelCountError".into(),
            CodeError::SignMismatch(_) => "SignMismatch".into(),
            CodeError::Invalid(e) => crate::error_name(e),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> CodeError {
    CodeError::SyntaxError {
        offset,
        message: message.into(),
    }
}

/// Small cursor over an ASCII line.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn expect(&mut self, lit: &str) -> Result<(), CodeError> {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(syntax(self.pos, format!("expected `{lit}`")))
        }
    }

    fn number(&mut self) -> Result<usize, CodeError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(syntax(self.pos, "expected a number"));
        }
        let v = self.rest()[..digits]
            .parse()
            .map_err(|_| syntax(self.pos, "number out of range"))?;
        self.pos += digits;
        Ok(v)
    }

    fn at_end(&self) -> bool {
        self.pos == self.text.len()
    }
}

pub fn parse_mapcode(text: &str) -> Result<Shadow, CodeError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let mut c = Cursor::new(text);
    c.expect("shadow v=")?;
    let n = c.number()?;
    if n == 0 {
        if !c.at_end() {
            return Err(syntax(c.pos, "trailing input after `v=0`"));
        }
        return Ok(Shadow::validate(0, Vec::new())?);
    }
    c.expect(" alpha=")?;
    let mut alpha = vec![usize::MAX; 4 * n];
    loop {
        let at = c.pos;
        let a = c.number()?;
        c.expect("-")?;
        let b = c.number()?;
        if a >= 4 * n || b >= 4 * n {
            return Err(syntax(at, format!("dart out of range 0..{}", 4 * n)));
        }
        if a == b {
            return Err(ShadowError::FixedPointDart(a).into());
        }
        if alpha[a] != usize::MAX || alpha[b] != usize::MAX {
            return Err(ShadowError::NotInvolution(if alpha[a] != usize::MAX { a } else { b }).into());
        }
        alpha[a] = b;
        alpha[b] = a;
        if c.at_end() {
            break;
        }
        c.expect(",")?;
    }
    if let Some(d) = alpha.iter().position(|&x| x == usize::MAX) {
        return Err(ShadowError::NotInvolution(d).into());
    }
    Ok(Shadow::validate(n, alpha)?)
}

pub fn emit_mapcode(s: &Shadow) -> String {
    let n = s.crossings();
    if n == 0 {
        return "shadow v=0".to_string();
    }
    let pairs: Vec<String> = (0..s.dart_count())
        .filter(|&d| d < s.alpha(d))
        .map(|d| format!("{}-{}", d, s.alpha(d)))
        .collect();
    format!("shadow v={} alpha={}", n, pairs.join(","))
}

pub fn parse_gauss(text: &str) -> Result<Shadow, CodeError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let mut c = Cursor::new(text);
    c.expect("gauss:")?;
    let body_start = c.pos;
    let body = c.rest();
    if body.trim() == "-" {
        return Ok(Shadow::trivial());
    }
    // (label, sign, byte offset)
    let mut tokens: Vec<(usize, bool, usize)> = Vec::new();
    let mut offset = body_start;
    for piece in body.split(' ') {
        if piece.is_empty() {
            offset += 1;
            continue;
        }
        let (num, sign) = piece.split_at(piece.len() - 1);
        let positive = match sign {
            "+" => true,
            "-" => false,
            _ => return Err(syntax(offset + piece.len() - 1, "expected `+` or `-`")),
        };
        let label: usize = num
            .parse()
            .ok()
            .filter(|&l: &usize| l >= 1 && num.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| syntax(offset, "expected a positive label"))?;
        tokens.push((label, positive, offset));
        offset += piece.len() + 1;
    }
    if tokens.is_empty() {
        return Err(syntax(body_start, "empty Gauss word"));
    }
    let max_label = tokens.iter().map(|t| t.0).max().unwrap_or(0);
    let mut count = vec![0usize; max_label + 1];
    let mut sign = vec![None; max_label + 1];
    for &(l, s, _) in &tokens {
        count[l] += 1;
        match sign[l] {
            None => sign[l] = Some(s),
            Some(prev) if prev != s => return Err(CodeError::SignMismatch(l)),
            _ => {}
        }
    }
    for (l, &k) in count.iter().enumerate().skip(1) {
        if k != 2 {
            return Err(CodeError::LabelCountError { label: l, count: k });
        }
    }
    let n = max_label;
    let mut first_pos = vec![None; n];
    let mut arrivals = Vec::with_capacity(2 * n);
    for (pos, &(l, s, _)) in tokens.iter().enumerate() {
        let k = l - 1;
        let a = match first_pos[k] {
            None => {
                first_pos[k] = Some(pos);
                4 * k
            }
            Some(f) => {
                if s == (f % 2 == 0) {
                    4 * k + 1
                } else {
                    4 * k + 3
                }
            }
        };
        arrivals.push(a);
    }
    let mut alpha = vec![0; 4 * n];
    for i in 0..arrivals.len() {
        let dep = opposite(arrivals[i]);
        let next = arrivals[(i + 1) % arrivals.len()];
        alpha[dep] = next;
        alpha[next] = dep;
    }
    Ok(Shadow::validate(n, alpha)?)
}

/// Gauss word of `s`, starting by arriving at crossing 0 through dart 0.
/// Labels are assigned in order of first visit.
pub fn emit_gauss(s: &Shadow) -> String {
    if s.is_trivial() {
        return "gauss: -".to_string();
    }
    let n = s.crossings();
    let mut first: Vec<Option<(Dart, usize)>> = vec![None; n];
    let mut label = vec![0usize; n];
    let mut next_label = 1;
    let mut visits: Vec<usize> = Vec::with_capacity(2 * n);
    let mut signs = vec![true; n];
    let mut a = 0;
    for pos in 0..2 * n {
        let k = vertex(a);
        match first[k] {
            None => {
                first[k] = Some((a, pos));
                label[k] = next_label;
                next_label += 1;
            }
            Some((f, fpos)) => {
                let ccw = (a + 4 - f) & 3 == 1;
                signs[k] = ccw == (fpos % 2 == 0);
            }
        }
        visits.push(k);
        a = s.tau(a);
    }
    let words: Vec<String> = visits
        .iter()
        .map(|&k| format!("{}{}", label[k], if signs[k] { '+' } else { '-' }))
        .collect();
    format!("gauss: {}", words.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_code;

    #[test]
    fn trivial_round_trips() {
        let o = parse_mapcode("shadow v=0").unwrap();
        assert!(o.is_trivial());
        assert_eq!(emit_mapcode(&o), "shadow v=0");
        assert_eq!(emit_gauss(&o), "gauss: -");
        assert!(parse_gauss("gauss: -").unwrap().is_trivial());
    }

    #[test]
    fn fixed_point_rejected() {
        assert_eq!(
            parse_mapcode("shadow v=1 alpha=0-0"),
            Err(CodeError::Invalid(ShadowError::FixedPointDart(0)))
        );
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse_mapcode("shadow v=1 alpha=0-3,1x2") {
            Err(CodeError::SyntaxError { offset, .. }) => assert_eq!(offset, 22),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_mapcode("shadw v=0"),
            Err(CodeError::SyntaxError { offset: 0, .. })
        ));
        assert!(matches!(
            parse_gauss("gauss: 1* 1+"),
            Err(CodeError::SyntaxError { .. })
        ));
    }

    #[test]
    fn figure_eight_gauss() {
        let s = parse_gauss("gauss: 1+ 1+").unwrap();
        assert_eq!(s.crossings(), 1);
        assert_eq!(s.faces().len(), 3);
        assert_eq!(emit_gauss(&s), "gauss: 1+ 1+");
        let m = parse_gauss("gauss: 1- 1-").unwrap();
        assert_eq!(canonical_code(&s), canonical_code(&m));
    }

    #[test]
    fn gauss_label_errors() {
        assert_eq!(
            parse_gauss("gauss: 1+ 2+ 1+"),
            Err(CodeError::LabelCountError { label: 2, count: 1 })
        );
        assert_eq!(parse_gauss("gauss: 1+ 1-"), Err(CodeError::SignMismatch(1)));
        assert_eq!(
            parse_gauss("gauss: 1+ 1+ 1+"),
            Err(CodeError::LabelCountError { label: 1, count: 3 })
        );
    }

    #[test]
    fn trefoil_word() {
        let s = parse_gauss("gauss: 1+ 2+ 3+ 1+ 2+ 3+").unwrap();
        assert_eq!(s.crossings(), 3);
        assert!(s.is_reduced());
        assert_eq!(emit_gauss(&s), "gauss: 1+ 2+ 3+ 1+ 2+ 3+");
    }
}
