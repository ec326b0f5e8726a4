use std::fmt;
use std::str::FromStr;

use super::map::PrefixMap;
use crate::clopen::Word;
use crate::error::{Error, Result};

impl fmt::Display for PrefixMap {
    /// Reduced sorted form, e.g. `{00->0,01->10,1->11}`; the identity prints
    /// as `id`. Round-trips bit-exactly through `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        write!(f, "{{")?;
        for (i, (s, t)) in self.cells().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}->{t}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PrefixMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PrefixMap {
    type Err = Error;

    /// Parses `id` or `{src->tgt,...}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "id" {
            return Ok(PrefixMap::identity());
        }
        let inner = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("element {s:?} must be `id` or brace-delimited cells"),
            })?;
        let mut cells = Vec::new();
        for part in inner.split(',') {
            cells.push(parse_cell(part, 0)?);
        }
        PrefixMap::from_cells(cells)
    }
}

fn parse_cell(part: &str, line: usize) -> Result<(Word, Word)> {
    let (src, tgt) = part.split_once("->").ok_or_else(|| Error::Parse {
        line,
        msg: format!("cell {part:?} must have the form `source -> target`"),
    })?;
    let s = Word::parse(src).map_err(|e| at_line(e, line))?;
    let t = Word::parse(tgt).map_err(|e| at_line(e, line))?;
    Ok((s, t))
}

fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}

/// Parses an element-definition file: blocks of the form
///
/// ```text
/// map <name>
/// <source> -> <target>
/// ...
/// ```
///
/// terminated by a blank line. A block body of the single keyword `id`
/// denotes the identity. Lines starting with `#` are comments.
pub fn parse_map_file(text: &str) -> Result<Vec<(String, PrefixMap)>> {
    let mut out: Vec<(String, PrefixMap)> = Vec::new();
    let mut name: Option<(String, usize)> = None;
    let mut cells: Vec<(Word, Word)> = Vec::new();
    let mut is_id = false;

    let mut finish = |name: &mut Option<(String, usize)>,
                      cells: &mut Vec<(Word, Word)>,
                      is_id: &mut bool|
     -> Result<()> {
        if let Some((n, start_line)) = name.take() {
            let map = if *is_id {
                PrefixMap::identity()
            } else if cells.is_empty() {
                return Err(Error::Parse {
                    line: start_line,
                    msg: format!("map {n:?} has no cells"),
                });
            } else {
                PrefixMap::from_cells(std::mem::take(cells))?
            };
            cells.clear();
            *is_id = false;
            out.push((n, map));
        }
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            finish(&mut name, &mut cells, &mut is_id)?;
            continue;
        }
        if let Some(rest) = line.strip_prefix("map ") {
            finish(&mut name, &mut cells, &mut is_id)?;
            let n = rest.trim();
            if n.is_empty() {
                return Err(Error::Parse { line: line_no, msg: "map block needs a name".into() });
            }
            name = Some((n.to_string(), line_no));
            continue;
        }
        if name.is_none() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `map <name>`, found {line:?}"),
            });
        }
        if line == "id" {
            is_id = true;
            continue;
        }
        cells.push(parse_cell(line, line_no)?);
    }
    finish(&mut name, &mut cells, &mut is_id)?;
    Ok(out)
}

/// Renders named maps in the block file format; parses back bit-exactly.
pub fn render_map_file(maps: &[(String, PrefixMap)]) -> String {
    let mut out = String::new();
    for (i, (name, map)) in maps.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str("map ");
        out.push_str(name);
        out.push('\n');
        if map.is_identity() {
            out.push_str("id\n");
        } else {
            for (s, t) in map.cells() {
                out.push_str(&format!("{s} -> {t}\n"));
            }
        }
    }
    out
}
