//! Reading graphs, ideals and certificates from paths, stdin or inline JSON.

use std::fs;
use std::io::Read;

use coverideal::constructions::GraphSource;
use coverideal::graph::parse_edge_list;
use coverideal::homological::CertificateFile;
use coverideal::{symbolic_power_cover, Graph, MonomialIdeal};
use serde_json::Value;

use crate::report::Failure;

/// Raw text of one input together with where it came from.
pub struct Source {
    pub text: String,
}

impl Source {
    /// `-` reads stdin; text starting with `{` is taken literally; anything
    /// else is a path.
    pub fn load(arg: &str) -> Result<Self, Failure> {
        let text = if arg == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::io(format!("stdin: {e}")))?;
            s
        } else if arg.trim_start().starts_with('{') {
            arg.to_string()
        } else {
            fs::read_to_string(arg).map_err(|e| Failure::io(format!("{arg}: {e}")))?
        };
        Ok(Source { text })
    }
}

pub enum Target {
    Graph(Graph),
    Ideal(MonomialIdeal),
}

impl Target {
    pub fn parse(src: &Source) -> Result<Self, Failure> {
        match serde_json::from_str::<Value>(&src.text) {
            Ok(v) if v.get("ring").is_some() => {
                Ok(Target::Ideal(MonomialIdeal::from_json_str(&src.text)?))
            }
            Ok(_) => Ok(Target::Graph(GraphSource::from_json_str(&src.text)?.build()?)),
            Err(_) => Ok(Target::Graph(parse_edge_list(&src.text)?)),
        }
    }

    /// Graphs stand for the `k`-th symbolic power of their cover ideal.
    pub fn into_ideal(self, k: u32) -> Result<MonomialIdeal, Failure> {
        match self {
            Target::Ideal(i) => Ok(i),
            Target::Graph(g) => Ok(symbolic_power_cover(&g, k)?),
        }
    }

    pub fn into_graph(self, what: &str) -> Result<Graph, Failure> {
        match self {
            Target::Graph(g) => Ok(g),
            Target::Ideal(_) => Err(Failure::usage(format!("{what} expects a graph, got an ideal"))),
        }
    }
}

pub fn graph(src: &Source) -> Result<Graph, Failure> {
    Target::parse(src)?.into_graph("this command")
}

pub fn certificate(src: &Source) -> Result<CertificateFile, Failure> {
    serde_json::from_str(&src.text).map_err(|e| Failure::usage(format!("certificate: {e}")))
}
