//! File formats. Five artefact kinds move between the library and disk,
//! all line-oriented, 1-based, and deterministic so identical inputs
//! produce byte-identical files:
//!
//! * graphs in DIMACS `.col` form: `c` comments, one `p edge V E` line,
//!   then `e u v` lines with `u < v` ascending;
//! * label sidecars mapping vertex indices to construction coordinates:
//!   `p labels V`, then `<idx> part <i> <j> <k>` or
//!   `<idx> selector <i> <b1> <b2> ...` lines in index order;
//! * colourings: `p colouring V K`, then `<vertex> <colour>` lines
//!   covering every vertex in order;
//! * vertex sets: `p set V COUNT`, then one member per line, ascending;
//! * certificates and reports as JSON through serde.
//!
//! Readers validate everything they parse (counts, ranges, ordering,
//! duplicates) and name the offending file and line in errors.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::colouring::Colouring;
use crate::construct::VertexLabel;
use crate::error::Error;
use crate::graph::{Graph, VertexSet};

fn open_reader(path: &Path) -> Result<BufReader<File>, Error> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(path.display().to_string(), e))
}

fn open_writer(path: &Path) -> Result<BufWriter<File>, Error> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path.display().to_string(), e))
}

fn finish(path: &Path, mut w: BufWriter<File>) -> Result<(), Error> {
    w.flush().map_err(|e| Error::io(path.display().to_string(), e))
}

struct Lines<'a> {
    path: &'a Path,
    reader: BufReader<File>,
    line_no: usize,
}

impl<'a> Lines<'a> {
    fn new(path: &'a Path) -> Result<Self, Error> {
        Ok(Lines {
            path,
            reader: open_reader(path)?,
            line_no: 0,
        })
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::format(self.path.display().to_string(), self.line_no, message)
    }

    /// Next line that is neither blank nor a `c` comment.
    fn next_content(&mut self) -> Result<Option<String>, Error> {
        loop {
            let mut line = String::new();
            let read = self
                .reader
                .read_line(&mut line)
                .map_err(|e| Error::io(self.path.display().to_string(), e))?;
            if read == 0 {
                return Ok(None);
            }
            self.line_no += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
                continue;
            }
            return Ok(Some(trimmed.to_string()));
        }
    }

    fn header(&mut self, kind: &str, fields: usize) -> Result<Vec<u64>, Error> {
        let line = self
            .next_content()?
            .ok_or_else(|| self.err(format!("missing `p {kind}` header")))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != fields + 2 || tokens[0] != "p" || tokens[1] != kind {
            return Err(self.err(format!(
                "expected `p {kind}` with {fields} fields, found `{line}`"
            )));
        }
        tokens[2..]
            .iter()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| self.err(format!("unparseable number `{t}`")))
            })
            .collect()
    }
}

fn parse_u64(lines: &Lines<'_>, token: &str) -> Result<u64, Error> {
    token
        .parse::<u64>()
        .map_err(|_| lines.err(format!("unparseable number `{token}`")))
}

fn write_comments(w: &mut impl Write, comments: &[String]) -> std::io::Result<()> {
    for comment in comments {
        if comment.is_empty() {
            writeln!(w, "c")?;
        } else {
            writeln!(w, "c {comment}")?;
        }
    }
    Ok(())
}

/// Writes a graph in DIMACS `.col` form, with `comments` leading.
pub fn write_graph(path: &Path, g: &Graph, comments: &[String]) -> Result<(), Error> {
    let mut w = open_writer(path)?;
    let io_err = |e| Error::io(path.display().to_string(), e);
    write_comments(&mut w, comments).map_err(io_err)?;
    writeln!(w, "p edge {} {}", g.vertex_count(), g.edge_count()).map_err(io_err)?;
    for (u, v) in g.edges() {
        writeln!(w, "e {} {}", u + 1, v + 1).map_err(io_err)?;
    }
    finish(path, w)
}

/// Reads a DIMACS `.col` graph. Duplicate and reversed edge lines are
/// tolerated (the graph canonicalizes), but the header's counts must
/// match what the lines describe.
pub fn read_graph(path: &Path) -> Result<Graph, Error> {
    let mut lines = Lines::new(path)?;
    let header = lines.header("edge", 2)?;
    let (vertex_count, edge_count) = (header[0], header[1]);
    if vertex_count > u64::from(u32::MAX) {
        return Err(lines.err(format!("{vertex_count} vertices exceed the index range")));
    }
    let mut edges = Vec::new();
    while let Some(line) = lines.next_content()? {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "e" {
            return Err(lines.err(format!("expected `e u v`, found `{line}`")));
        }
        let u = parse_u64(&lines, tokens[1])?;
        let v = parse_u64(&lines, tokens[2])?;
        for w in [u, v] {
            if w < 1 || w > vertex_count {
                return Err(lines.err(format!("vertex {w} outside 1..={vertex_count}")));
            }
        }
        if u == v {
            return Err(lines.err(format!("self-loop at vertex {u}")));
        }
        edges.push((u as u32 - 1, v as u32 - 1));
    }
    let g = Graph::from_edges(vertex_count as usize, edges)?;
    if g.edge_count() != edge_count {
        return Err(Error::format(
            path.display().to_string(),
            0,
            format!(
                "header promises {edge_count} edges, lines describe {}",
                g.edge_count()
            ),
        ));
    }
    Ok(g)
}

/// Writes the label sidecar for a built instance.
pub fn write_labels(path: &Path, labels: &[VertexLabel], comments: &[String]) -> Result<(), Error> {
    let mut w = open_writer(path)?;
    let io_err = |e| Error::io(path.display().to_string(), e);
    write_comments(&mut w, comments).map_err(io_err)?;
    writeln!(w, "p labels {}", labels.len()).map_err(io_err)?;
    for (idx, label) in labels.iter().enumerate() {
        match label {
            VertexLabel::Part { part, row, block } => {
                writeln!(w, "{} part {part} {row} {block}", idx + 1).map_err(io_err)?;
            }
            VertexLabel::Selector { part, blocks } => {
                write!(w, "{} selector {part}", idx + 1).map_err(io_err)?;
                for b in blocks {
                    write!(w, " {b}").map_err(io_err)?;
                }
                writeln!(w).map_err(io_err)?;
            }
        }
    }
    finish(path, w)
}

/// Reads a label sidecar; lines must appear in index order and cover
/// `1..=V` exactly.
pub fn read_labels(path: &Path) -> Result<Vec<VertexLabel>, Error> {
    let mut lines = Lines::new(path)?;
    let header = lines.header("labels", 1)?;
    let count = header[0];
    let mut labels = Vec::with_capacity(count as usize);
    while let Some(line) = lines.next_content()? {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 2 {
            return Err(lines.err(format!("expected `<idx> part|selector ...`, found `{line}`")));
        }
        let idx = parse_u64(&lines, tokens[0])?;
        if idx != labels.len() as u64 + 1 {
            return Err(lines.err(format!(
                "label index {idx} out of order (expected {})",
                labels.len() + 1
            )));
        }
        let label = match tokens[1] {
            "part" => {
                if tokens.len() != 5 {
                    return Err(lines.err("`part` takes exactly three coordinates"));
                }
                let coords: Vec<u64> = tokens[2..]
                    .iter()
                    .map(|t| parse_u64(&lines, t))
                    .collect::<Result<_, _>>()?;
                VertexLabel::Part {
                    part: into_u32(&lines, coords[0])?,
                    row: into_u32(&lines, coords[1])?,
                    block: into_u32(&lines, coords[2])?,
                }
            }
            "selector" => {
                if tokens.len() < 4 {
                    return Err(lines.err("`selector` takes a part and at least two blocks"));
                }
                let part = into_u32(&lines, parse_u64(&lines, tokens[2])?)?;
                let blocks: Vec<u32> = tokens[3..]
                    .iter()
                    .map(|t| parse_u64(&lines, t).and_then(|v| into_u32(&lines, v)))
                    .collect::<Result<_, _>>()?;
                if blocks.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(lines.err("selector blocks must be strictly increasing"));
                }
                VertexLabel::Selector { part, blocks }
            }
            other => return Err(lines.err(format!("unknown label kind `{other}`"))),
        };
        labels.push(label);
    }
    if labels.len() as u64 != count {
        return Err(Error::format(
            path.display().to_string(),
            0,
            format!("header promises {count} labels, file holds {}", labels.len()),
        ));
    }
    Ok(labels)
}

fn into_u32(lines: &Lines<'_>, value: u64) -> Result<u32, Error> {
    u32::try_from(value).map_err(|_| lines.err(format!("{value} exceeds the index range")))
}

/// Writes a colouring, one `<vertex> <colour>` line per vertex.
pub fn write_colouring(path: &Path, col: &Colouring, comments: &[String]) -> Result<(), Error> {
    let mut w = open_writer(path)?;
    let io_err = |e| Error::io(path.display().to_string(), e);
    write_comments(&mut w, comments).map_err(io_err)?;
    writeln!(w, "p colouring {} {}", col.vertex_count(), col.palette()).map_err(io_err)?;
    for (v, &c) in col.colours().iter().enumerate() {
        writeln!(w, "{} {c}", v + 1).map_err(io_err)?;
    }
    finish(path, w)
}

/// Reads a colouring; every vertex must receive exactly one colour
/// inside the header's palette.
pub fn read_colouring(path: &Path) -> Result<Colouring, Error> {
    let mut lines = Lines::new(path)?;
    let header = lines.header("colouring", 2)?;
    let (vertex_count, palette) = (header[0], header[1]);
    let palette = u32::try_from(palette)
        .map_err(|_| lines.err(format!("palette {palette} exceeds the colour range")))?;
    let mut colours: Vec<Option<u32>> = vec![None; vertex_count as usize];
    while let Some(line) = lines.next_content()? {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(lines.err(format!("expected `<vertex> <colour>`, found `{line}`")));
        }
        let v = parse_u64(&lines, tokens[0])?;
        let c = parse_u64(&lines, tokens[1])?;
        if v < 1 || v > vertex_count {
            return Err(lines.err(format!("vertex {v} outside 1..={vertex_count}")));
        }
        let slot = &mut colours[v as usize - 1];
        if slot.is_some() {
            return Err(lines.err(format!("vertex {v} coloured twice")));
        }
        *slot = Some(
            u32::try_from(c).map_err(|_| lines.err(format!("colour {c} out of range")))?,
        );
    }
    let colours: Vec<u32> = colours
        .into_iter()
        .enumerate()
        .map(|(v, c)| {
            c.ok_or_else(|| {
                Error::format(
                    path.display().to_string(),
                    0,
                    format!("vertex {} received no colour", v + 1),
                )
            })
        })
        .collect::<Result<_, _>>()?;
    Colouring::new(colours, palette)
}

/// Writes a vertex set, one member per line, ascending.
pub fn write_vertex_set(
    path: &Path,
    set: &VertexSet,
    vertex_count: usize,
    comments: &[String],
) -> Result<(), Error> {
    let mut w = open_writer(path)?;
    let io_err = |e| Error::io(path.display().to_string(), e);
    write_comments(&mut w, comments).map_err(io_err)?;
    writeln!(w, "p set {} {}", vertex_count, set.len()).map_err(io_err)?;
    for v in set.iter() {
        writeln!(w, "{}", v + 1).map_err(io_err)?;
    }
    finish(path, w)
}

/// Reads a vertex set; members must be distinct and inside the header's
/// vertex count. Returns the set and the vertex count it refers to.
pub fn read_vertex_set(path: &Path) -> Result<(VertexSet, usize), Error> {
    let mut lines = Lines::new(path)?;
    let header = lines.header("set", 2)?;
    let (vertex_count, member_count) = (header[0], header[1]);
    let mut set = VertexSet::new();
    while let Some(line) = lines.next_content()? {
        let v = parse_u64(&lines, line.trim())?;
        if v < 1 || v > vertex_count {
            return Err(lines.err(format!("vertex {v} outside 1..={vertex_count}")));
        }
        if !set.insert(v as u32 - 1) {
            return Err(lines.err(format!("vertex {v} listed twice")));
        }
    }
    if set.len() as u64 != member_count {
        return Err(Error::format(
            path.display().to_string(),
            0,
            format!(
                "header promises {member_count} members, file holds {}",
                set.len()
            ),
        ));
    }
    Ok((set, vertex_count as usize))
}

/// Serializes any certificate or report as pretty JSON.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let mut w = open_writer(path)?;
    serde_json::to_writer_pretty(&mut w, value)
        .map_err(|e| Error::Format {
            path: path.display().to_string(),
            line: 0,
            message: e.to_string(),
        })
        .and_then(|()| {
            writeln!(w).map_err(|e| Error::io(path.display().to_string(), e))?;
            finish(path, w)
        })
}

/// Deserializes a JSON certificate or report.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let reader = open_reader(path)?;
    serde_json::from_reader(reader).map_err(|e| Error::Format {
        path: path.display().to_string(),
        line: e.line(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build, Budget, ConstructionParams};

    fn tempdir() -> tempfile::TempDir {
        tempfile::tempdir().expect("temp dir")
    }

    fn instance() -> crate::construct::LabeledGraph {
        let params = ConstructionParams::with_explicit_m(2, 2, 3, &Budget::default()).unwrap();
        build(&params).unwrap()
    }

    #[test]
    fn graph_round_trip_is_byte_stable() {
        let dir = tempdir();
        let lg = instance();
        let path = dir.path().join("g.col");
        write_graph(&path, lg.graph(), &["instance r=2 n=2 m=3".into()]).unwrap();
        let again = read_graph(&path).unwrap();
        assert_eq!(&again, lg.graph());

        let second = dir.path().join("g2.col");
        write_graph(&second, &again, &["instance r=2 n=2 m=3".into()]).unwrap();
        assert_eq!(
            std::fs::read(&path).unwrap(),
            std::fs::read(&second).unwrap()
        );
    }

    #[test]
    fn graph_reader_rejects_corruption() {
        let dir = tempdir();
        let path = dir.path().join("bad.col");

        std::fs::write(&path, "p edge 3 1\ne 1 4\n").unwrap();
        assert!(matches!(read_graph(&path), Err(Error::Format { .. })));

        std::fs::write(&path, "p edge 3 2\ne 1 2\n").unwrap();
        assert!(matches!(read_graph(&path), Err(Error::Format { .. })));

        std::fs::write(&path, "p edge 3 1\ne 2 2\n").unwrap();
        assert!(matches!(read_graph(&path), Err(Error::Format { .. })));

        std::fs::write(&path, "e 1 2\n").unwrap();
        assert!(matches!(read_graph(&path), Err(Error::Format { .. })));
    }

    #[test]
    fn labels_round_trip_and_validate() {
        let dir = tempdir();
        let lg = instance();
        let labels: Vec<_> = lg.labels().collect();
        let path = dir.path().join("g.labels");
        write_labels(&path, &labels, &[]).unwrap();
        assert_eq!(read_labels(&path).unwrap(), labels);

        let garbled = dir.path().join("bad.labels");
        std::fs::write(&garbled, "p labels 1\n1 selector 1 3 2\n").unwrap();
        assert!(matches!(read_labels(&garbled), Err(Error::Format { .. })));

        std::fs::write(&garbled, "p labels 2\n2 part 1 1 1\n").unwrap();
        assert!(matches!(read_labels(&garbled), Err(Error::Format { .. })));
    }

    #[test]
    fn colouring_round_trip_and_validation() {
        let dir = tempdir();
        let lg = instance();
        let col = crate::colouring::witness_proper(&lg);
        let path = dir.path().join("w.colouring");
        write_colouring(&path, &col, &["proper witness".into()]).unwrap();
        assert_eq!(read_colouring(&path).unwrap(), col);

        let bad = dir.path().join("bad.colouring");
        std::fs::write(&bad, "p colouring 2 2\n1 1\n").unwrap();
        assert!(matches!(read_colouring(&bad), Err(Error::Format { .. })));

        std::fs::write(&bad, "p colouring 2 2\n1 1\n1 2\n2 1\n").unwrap();
        assert!(matches!(read_colouring(&bad), Err(Error::Format { .. })));

        std::fs::write(&bad, "p colouring 2 2\n1 3\n2 1\n").unwrap();
        assert!(matches!(read_colouring(&bad), Err(Error::Colouring(_))));
    }

    #[test]
    fn vertex_set_round_trip_and_validation() {
        let dir = tempdir();
        let set: VertexSet = [0u32, 5, 11].into_iter().collect();
        let path = dir.path().join("d.set");
        write_vertex_set(&path, &set, 18, &[]).unwrap();
        let (again, vcount) = read_vertex_set(&path).unwrap();
        assert_eq!(again, set);
        assert_eq!(vcount, 18);

        let bad = dir.path().join("bad.set");
        std::fs::write(&bad, "p set 5 2\n3\n3\n").unwrap();
        assert!(matches!(read_vertex_set(&bad), Err(Error::Format { .. })));

        std::fs::write(&bad, "p set 5 1\n9\n").unwrap();
        assert!(matches!(read_vertex_set(&bad), Err(Error::Format { .. })));
    }

    #[test]
    fn json_round_trip() {
        let dir = tempdir();
        let lg = {
            let params =
                ConstructionParams::standard(2, 2, 2, &Budget::default()).unwrap();
            build(&params).unwrap()
        };
        let col = crate::colouring::witness_proper(&lg);
        let refutation = crate::refute::refute_dynamic(&lg, &col).unwrap();
        let path = dir.path().join("cert.json");
        write_json(&path, &refutation).unwrap();
        let again: crate::refute::DynamicRefutation = read_json(&path).unwrap();
        assert_eq!(again, refutation);

        let bad = dir.path().join("bad.json");
        std::fs::write(&bad, "{ not json").unwrap();
        assert!(matches!(
            read_json::<crate::refute::DynamicRefutation>(&bad),
            Err(Error::Format { .. })
        ));
    }
}
