//! Output records in the two supported formats. The jsonl form mirrors the
//! text form field for field.

use minorkit::freeplanar::FreePlanarVerdict;
use minorkit::graph::Graph;
use minorkit::graph6::write_graph6;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Jsonl,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "jsonl" => Ok(OutputFormat::Jsonl),
            other => Err(format!("unknown format `{other}` (expected text or jsonl)")),
        }
    }
}

pub fn planar_record(format: OutputFormat, g: &Graph, planar: bool) -> String {
    match format {
        OutputFormat::Text => format!("{} {}", write_graph6(g), planar as u8),
        OutputFormat::Jsonl => json!({
            "graph6": write_graph6(g),
            "planar": planar as u8,
        })
        .to_string(),
    }
}

pub fn freeplanar_record(
    format: OutputFormat,
    g: &Graph,
    planar: bool,
    route: &str,
    verdict: &FreePlanarVerdict,
) -> String {
    let witness = verdict.witness.as_ref().map(|w| w.summary());
    match format {
        OutputFormat::Text => {
            let mut line = format!(
                "{} {} {} {}",
                write_graph6(g),
                planar as u8,
                verdict.is_free_planar as u8,
                route
            );
            if let Some(w) = &witness {
                line.push(' ');
                line.push_str(w);
            }
            line
        }
        OutputFormat::Jsonl => json!({
            "graph6": write_graph6(g),
            "planar": planar as u8,
            "freeplanar": verdict.is_free_planar as u8,
            "route": route,
            "witness": witness,
        })
        .to_string(),
    }
}
