//! A small DOT subset: `digraph [name] { u -> v; w; }` with integer ids.

use std::fmt::Write as _;

use anyhow::{bail, Result};

use dicrit_core::Digraph;

/// Arcs one per line; vertices without arcs are declared on their own so
/// the order survives a round trip.
pub fn emit(g: &Digraph) -> String {
    let mut s = String::from("digraph {\n");
    for v in 1..=g.n() {
        if g.out_degree(v) == 0 && g.in_degree(v) == 0 {
            writeln!(s, "  {v};").unwrap();
        }
    }
    for (u, v) in g.arcs() {
        writeln!(s, "  {u} -> {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Num(usize),
    Arrow,
    Open,
    Close,
    Semi,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize, usize)>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line_no = li + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let col = i + 1;
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c == '/' && chars.get(i + 1) == Some(&'/') || c == '#' {
                break;
            } else if c == '-' && chars.get(i + 1) == Some(&'>') {
                out.push((Tok::Arrow, line_no, col));
                i += 2;
            } else if c == '{' {
                out.push((Tok::Open, line_no, col));
                i += 1;
            } else if c == '}' {
                out.push((Tok::Close, line_no, col));
                i += 1;
            } else if c == ';' || c == ',' {
                out.push((Tok::Semi, line_no, col));
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let Ok(v) = text.parse() else {
                    bail!("parse error at line {line_no}, column {col}: number too large");
                };
                out.push((Tok::Num(v), line_no, col));
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Word(chars[start..i].iter().collect()), line_no, col));
            } else {
                bail!("parse error at line {line_no}, column {col}: unexpected {c:?}");
            }
        }
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<Digraph> {
    let toks = tokenize(text)?;
    let mut pos = 0;
    let at = |pos: usize| -> String {
        match toks.get(pos) {
            Some((_, l, c)) => format!("line {l}, column {c}"),
            None => "end of input".to_string(),
        }
    };
    match toks.get(pos) {
        Some((Tok::Word(w), ..)) if w == "digraph" => pos += 1,
        _ => bail!("parse error at {}: expected `digraph`", at(pos)),
    }
    if let Some((Tok::Word(_), ..)) = toks.get(pos) {
        pos += 1;
    }
    if toks.get(pos).map(|t| &t.0) != Some(&Tok::Open) {
        bail!("parse error at {}: expected `{{`", at(pos));
    }
    pos += 1;
    let mut n = 0;
    let mut arcs = Vec::new();
    loop {
        match toks.get(pos).map(|t| &t.0) {
            Some(Tok::Close) => {
                pos += 1;
                break;
            }
            Some(Tok::Semi) => pos += 1,
            Some(Tok::Num(first)) => {
                let mut prev = *first;
                n = n.max(prev);
                pos += 1;
                // Chains `a -> b -> c` add every consecutive arc.
                while toks.get(pos).map(|t| &t.0) == Some(&Tok::Arrow) {
                    pos += 1;
                    let Some(Tok::Num(next)) = toks.get(pos).map(|t| &t.0) else {
                        bail!("parse error at {}: expected a vertex number after `->`", at(pos));
                    };
                    arcs.push((prev, *next));
                    n = n.max(*next);
                    prev = *next;
                    pos += 1;
                }
            }
            Some(_) => bail!("parse error at {}: expected a vertex number or `}}`", at(pos)),
            None => bail!("parse error at end of input: missing `}}`"),
        }
    }
    if pos != toks.len() {
        bail!("parse error at {}: trailing input", at(pos));
    }
    if arcs.iter().any(|&(u, v)| u == 0 || v == 0) {
        bail!("vertex ids start at 1");
    }
    Ok(Digraph::from_arc_list(n, &arcs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_isolated_vertex() {
        let g = Digraph::from_arc_list(4, &[(1, 2), (2, 3)]).unwrap();
        let text = emit(&g);
        assert!(text.contains("  4;\n"));
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn chains_names_and_comments() {
        let g = parse("digraph G {\n  1 -> 2 -> 3; // path\n  # note\n}\n").unwrap();
        assert_eq!(g.arcs(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("digraph {\n  1 -> ;\n}").unwrap_err().to_string();
        assert!(e.contains("line 2, column 8"), "{e}");
        let e = parse("graph { 1 -- 2 }").unwrap_err().to_string();
        assert!(e.contains("line 1, column 1"), "{e}");
        assert!(parse("digraph { 1 -> 1; }").is_err());
    }
}
