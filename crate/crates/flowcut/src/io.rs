//! Graph and seed-file parsing.
//!
//! Two graph formats are accepted:
//!
//! * **Edge list**: one `u v [w]` per line, whitespace-separated, `#` starts a
//!   comment; a missing weight means 1.0. Ids may be 0- or 1-indexed
//!   (`index_base`).
//! * **Matrix Market** symmetric coordinate format (`pattern`, `real`, or
//!   `integer` fields); entries are 1-indexed per the format definition.
//!
//! Seed files hold one node id per line with `#` comments.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{BuildStats, Graph};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn adjust_index(raw: u64, index_base: u32, line: usize) -> Result<u32> {
    if raw < index_base as u64 {
        return Err(Error::Parse {
            line,
            message: format!("node id {raw} below index base {index_base}"),
        });
    }
    u32::try_from(raw - index_base as u64).map_err(|_| Error::Parse {
        line,
        message: format!("node id {raw} too large"),
    })
}

/// Parses an edge list. Node count is one past the largest id seen.
pub fn read_edge_list(reader: impl BufRead, index_base: u32) -> Result<(Graph, BuildStats)> {
    let mut edges: Vec<(u32, u32, f64)> = Vec::new();
    let mut max_id: Option<u32> = None;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let text = strip_comment(&line);
        let mut fields = text.split_whitespace();
        let Some(u_str) = fields.next() else {
            continue;
        };
        let lineno = lineno + 1;
        let v_str = fields.next().ok_or_else(|| Error::Parse {
            line: lineno,
            message: "expected `u v [w]`".into(),
        })?;
        let parse_id = |s: &str| -> Result<u32> {
            let raw: u64 = s.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid node id `{s}`"),
            })?;
            adjust_index(raw, index_base, lineno)
        };
        let u = parse_id(u_str)?;
        let v = parse_id(v_str)?;
        let w = match fields.next() {
            Some(w_str) => w_str.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid weight `{w_str}`"),
            })?,
            None => 1.0,
        };
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                message: "trailing fields after `u v w`".into(),
            });
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v, w));
    }
    let Some(max_id) = max_id else {
        return Err(Error::Parse {
            line: 0,
            message: "no edges found".into(),
        });
    };
    Graph::from_edges(max_id as usize + 1, edges)
}

/// Parses a Matrix Market symmetric coordinate file.
pub fn read_matrix_market(reader: impl BufRead) -> Result<(Graph, BuildStats)> {
    let mut lines = reader.lines().enumerate();

    let (_, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 0,
        message: "empty file".into(),
    })?;
    let header = header?;
    let fields: Vec<String> = header.split_whitespace().map(str::to_lowercase).collect();
    if fields.len() < 5 || fields[0] != "%%matrixmarket" || fields[1] != "matrix" {
        return Err(Error::Parse {
            line: 1,
            message: "expected `%%MatrixMarket matrix coordinate <field> symmetric` header".into(),
        });
    }
    if fields[2] != "coordinate" {
        return Err(Error::Parse {
            line: 1,
            message: format!("unsupported format `{}` (need coordinate)", fields[2]),
        });
    }
    let pattern = match fields[3].as_str() {
        "pattern" => true,
        "real" | "integer" => false,
        other => {
            return Err(Error::Parse {
                line: 1,
                message: format!("unsupported field type `{other}`"),
            })
        }
    };
    if fields[4] != "symmetric" {
        return Err(Error::Parse {
            line: 1,
            message: format!("unsupported symmetry `{}` (need symmetric)", fields[4]),
        });
    }

    let mut dims: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(u32, u32, f64)> = Vec::new();
    let mut entries = 0usize;
    for (lineno, line) in lines {
        let line = line?;
        let lineno = lineno + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('%') {
            continue;
        }
        let mut fields = text.split_whitespace();
        if dims.is_none() {
            let mut next_dim = |name: &str| -> Result<usize> {
                fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse {
                        line: lineno,
                        message: format!("invalid size line (missing {name})"),
                    })
            };
            let rows = next_dim("rows")?;
            let cols = next_dim("cols")?;
            let nnz = next_dim("entries")?;
            if rows != cols {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("matrix must be square, got {rows}x{cols}"),
                });
            }
            dims = Some((rows, cols, nnz));
            edges.reserve(nnz);
            continue;
        }
        let mut parse_id = |name: &str| -> Result<u32> {
            let raw: u64 =
                fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse {
                        line: lineno,
                        message: format!("invalid entry (missing {name})"),
                    })?;
            adjust_index(raw, 1, lineno)
        };
        let u = parse_id("row")?;
        let v = parse_id("col")?;
        let w = if pattern {
            1.0
        } else {
            fields
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse {
                    line: lineno,
                    message: "invalid entry (missing value)".into(),
                })?
        };
        entries += 1;
        if u == v {
            continue; // diagonal entries are self-loops; ignore
        }
        edges.push((u, v, w));
    }
    let Some((rows, _, nnz)) = dims else {
        return Err(Error::Parse {
            line: 0,
            message: "missing size line".into(),
        });
    };
    if entries != nnz {
        return Err(Error::Parse {
            line: 0,
            message: format!("found {entries} entries but the size line declares {nnz}"),
        });
    }
    Graph::from_edges(rows, edges)
}

/// Writes a graph as a 0-indexed edge list, one `u v w` per line, `u < v`.
pub fn write_edge_list(g: &Graph, mut writer: impl Write) -> Result<()> {
    for (u, v, w) in g.edges() {
        writeln!(writer, "{u} {v} {w}")?;
    }
    Ok(())
}

/// Parses a seed file: one node id per line, `#` comments.
pub fn read_seed_ids(reader: impl BufRead, index_base: u32) -> Result<Vec<u32>> {
    let mut ids = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let text = strip_comment(&line);
        let lineno = lineno + 1;
        for field in text.split_whitespace() {
            let raw: u64 = field.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid node id `{field}`"),
            })?;
            ids.push(adjust_index(raw, index_base, lineno)?);
        }
    }
    Ok(ids)
}
