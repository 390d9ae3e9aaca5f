use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use clap::ValueEnum;
use ngsplit::codec::{parse_edge_list, Graph6Reader};
use ngsplit::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Edges,
}

/// One input graph, or the reason it could not be read.
pub struct Record {
    pub index: usize,
    pub graph: Result<Graph, String>,
}

fn open(path: Option<&Path>) -> io::Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

/// Read every record. I/O failures to open or read the source are returned as
/// `Err`; per-record parse problems are carried inside the records.
pub fn read_records(path: Option<&Path>, format: Format) -> io::Result<Vec<Record>> {
    let mut src = open(path)?;
    match format {
        Format::G6 => Ok(Graph6Reader::new(src)
            .enumerate()
            .map(|(i, (line, g))| Record {
                index: i + 1,
                graph: g.map_err(|e| match e {
                    ngsplit::Error::Parse { .. } => e.to_string(),
                    other => format!("line {line}: {other}"),
                }),
            })
            .collect()),
        Format::Edges => {
            let mut text = String::new();
            src.read_to_string(&mut text)?;
            if text.trim().is_empty() {
                return Ok(Vec::new());
            }
            let graph = parse_edge_list(&text)
                .map_err(|e| e.to_string())
                .map(|parsed| {
                    if !parsed.duplicates.is_empty() {
                        eprintln!(
                            "warning: {} duplicate edge(s) collapsed",
                            parsed.duplicates.len()
                        );
                    }
                    parsed.graph
                });
            Ok(vec![Record { index: 1, graph }])
        }
    }
}
