//! The `blalg v1` text format for finite algebras, plus builtin algebra
//! names for the standard chains.
//!
//! Layout (whitespace separated, `#` starts a comment line):
//!
//! ```text
//! blalg v1
//! elements: 0 h 1
//! bottom: 0
//! top: 1
//! otimes:
//! 0 0 0
//! 0 0 h
//! 0 h 1
//! imp:
//! 1 1 1
//! h 1 1
//! 0 h 1
//! ```
//!
//! Rows are the left operand, in element order. Lattice operations are
//! always derived, never read from a file.

use super::{Algebra, FiniteTableData};
use crate::error::{Error, Result};

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.iter.by_ref() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Some((i + 1, t));
        }
        None
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_blalg(text: &str) -> Result<Algebra> {
    let mut lines = Lines {
        iter: text.lines().enumerate(),
    };

    let (ln, header) = lines
        .next_content()
        .ok_or_else(|| parse_err(1, "empty file"))?;
    if header != "blalg v1" {
        return Err(parse_err(ln, "expected header `blalg v1`"));
    }

    let (ln, elems) = lines
        .next_content()
        .ok_or_else(|| parse_err(ln, "missing `elements:` line"))?;
    let names: Vec<String> = elems
        .strip_prefix("elements:")
        .ok_or_else(|| parse_err(ln, "expected `elements:`"))?
        .split_whitespace()
        .map(String::from)
        .collect();
    if names.is_empty() {
        return Err(parse_err(ln, "no elements listed"));
    }
    let mut index = std::collections::HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(parse_err(ln, format!("duplicate element `{n}`")));
        }
    }
    let n = names.len();

    let mut read_label = |key: &str| -> Result<usize> {
        let (ln, line) = lines
            .next_content()
            .ok_or_else(|| parse_err(0, format!("missing `{key}:` line")))?;
        let label = line
            .strip_prefix(&format!("{key}:"))
            .ok_or_else(|| parse_err(ln, format!("expected `{key}:`")))?
            .trim();
        index
            .get(label)
            .copied()
            .ok_or_else(|| parse_err(ln, format!("unknown element `{label}`")))
    };
    let bottom = read_label("bottom")?;
    let top = read_label("top")?;

    let mut read_table = |key: &str| -> Result<Vec<Vec<usize>>> {
        let (ln, line) = lines
            .next_content()
            .ok_or_else(|| parse_err(0, format!("missing `{key}:` section")))?;
        if line != format!("{key}:") {
            return Err(parse_err(ln, format!("expected `{key}:`")));
        }
        let mut table = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, row) = lines
                .next_content()
                .ok_or_else(|| parse_err(ln, format!("{key} table has too few rows")))?;
            let cells: Vec<&str> = row.split_whitespace().collect();
            if cells.len() != n {
                return Err(parse_err(
                    ln,
                    format!("{key} row has {} entries, expected {n}", cells.len()),
                ));
            }
            let mut out = Vec::with_capacity(n);
            for c in cells {
                let i = index
                    .get(c)
                    .copied()
                    .ok_or_else(|| parse_err(ln, format!("unknown element `{c}`")))?;
                out.push(i);
            }
            table.push(out);
        }
        Ok(table)
    };
    let otimes = read_table("otimes")?;
    let imp = read_table("imp")?;

    if let Some((ln, extra)) = lines.next_content() {
        return Err(parse_err(ln, format!("unexpected trailing content `{extra}`")));
    }

    Algebra::finite_table(FiniteTableData {
        names,
        bottom,
        top,
        otimes,
        imp,
    })
}

/// Render a finite algebra in the `blalg v1` format, using its element
/// renderings as labels.
pub fn render_blalg(alg: &Algebra) -> Result<String> {
    let carrier = alg
        .carrier()
        .ok_or_else(|| Error::UnsupportedShape("only finite algebras can be rendered".into()))?;
    let names: Vec<String> = carrier.iter().map(|v| alg.render_value(v)).collect();
    let pos = |v: &super::Value| carrier.iter().position(|w| w == v).expect("closed carrier");

    let mut out = String::from("blalg v1\n");
    out.push_str(&format!("elements: {}\n", names.join(" ")));
    out.push_str(&format!("bottom: {}\n", names[pos(&alg.v_bottom())]));
    out.push_str(&format!("top: {}\n", names[pos(&alg.v_top())]));
    for (key, op) in [
        ("otimes", &(|x, y| alg.v_otimes(x, y)) as &dyn Fn(_, _) -> _),
        ("imp", &|x, y| alg.v_imp(x, y)),
    ] {
        out.push_str(&format!("{key}:\n"));
        for x in carrier {
            let row: Vec<&str> = carrier
                .iter()
                .map(|y| names[pos(&op(x, y))].as_str())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    Ok(out)
}

/// Builtin algebra names: `lukasiewicz:N`, `lukasiewicz:q`, `godel:N`,
/// `godel:q`, `product:q`, `boolean`.
pub fn builtin(name: &str) -> Result<Algebra> {
    let bad = || Error::Parse {
        line: 1,
        msg: format!(
            "unknown builtin `{name}` (expected lukasiewicz:N|q, godel:N|q, product:q, boolean)"
        ),
    };
    if name == "boolean" {
        return Ok(Algebra::boolean());
    }
    let (kind, arg) = name.split_once(':').ok_or_else(bad)?;
    match (kind, arg) {
        ("lukasiewicz", "q") => Ok(Algebra::lukasiewicz_rational()),
        ("godel", "q") => Ok(Algebra::godel_rational()),
        ("product", "q") => Ok(Algebra::product_rational()),
        ("lukasiewicz", n) => {
            let n: usize = n.parse().map_err(|_| bad())?;
            Algebra::lukasiewicz_finite(n)
        }
        ("godel", n) => {
            let n: usize = n.parse().map_err(|_| bad())?;
            Algebra::godel_finite(n)
        }
        _ => Err(bad()),
    }
}
