//! Graph export in Graphviz DOT.

use std::fmt::{Display, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::criteria::{Analysis, CriteriaError, CriteriaGraph};
use crate::diagram::{Diagram, Side, SideRef};

/// Which criteria graph to export.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphSelector {
    /// `G_k`.
    Gk(usize),
    /// `H_d` with its two blocks.
    Hd(usize),
    /// `G(k, l, (i,e), (j,d))`.
    Gdetail { k: usize, l: usize, u: SideRef, w: SideRef },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SelectorError {
    #[error("unknown graph selector {0:?}; expected Gk:K, Hd:D or Gdetail:K,L,I,E,J,D")]
    Syntax(String),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
}

fn side(s: &str) -> Option<Side> {
    match s {
        "-" | "minus" => Some(Side::Minus),
        "+" | "plus" => Some(Side::Plus),
        _ => None,
    }
}

impl FromStr for GraphSelector {
    type Err = SelectorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SelectorError::Syntax(s.to_string());
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        match kind {
            "Gk" => Ok(GraphSelector::Gk(num(args)?)),
            "Hd" => Ok(GraphSelector::Hd(num(args)?)),
            "Gdetail" => {
                let p: Vec<&str> = args.split(',').map(str::trim).collect();
                if p.len() != 6 {
                    return Err(bad());
                }
                let sref = |i: &str, e: &str| -> Result<SideRef, SelectorError> {
                    let i = num(i)?;
                    if i == 0 {
                        return Err(bad());
                    }
                    Ok(SideRef::new(i - 1, side(e).ok_or_else(bad)?))
                };
                Ok(GraphSelector::Gdetail {
                    k: num(p[0])?,
                    l: num(p[1])?,
                    u: sref(p[2], p[3])?,
                    w: sref(p[4], p[5])?,
                })
            }
            _ => Err(bad()),
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text for a criteria graph; a partitioned graph gets one cluster per block.
pub fn to_dot<V: Ord + Clone + Display>(name: &str, g: &CriteriaGraph<V>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(name));
    match g.blocks() {
        Some((minus, plus)) => {
            for (label, block) in [("minus", minus), ("plus", plus)] {
                let _ = writeln!(out, "  subgraph \"cluster_{label}\" {{");
                let _ = writeln!(out, "    label = {};", quote(label));
                for v in block {
                    let _ = writeln!(out, "    {};", quote(&v.to_string()));
                }
                let _ = writeln!(out, "  }}");
            }
        }
        None => {
            for v in g.vertices() {
                let _ = writeln!(out, "  {};", quote(&v.to_string()));
            }
        }
    }
    for (u, w) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(&u.to_string()), quote(&w.to_string()));
    }
    out.push_str("}\n");
    out
}

impl GraphSelector {
    /// DOT text of the selected graph of `d`.
    pub fn export(&self, d: &Diagram) -> Result<String, SelectorError> {
        let a = Analysis::new(d);
        Ok(match *self {
            GraphSelector::Gk(k) => to_dot(&format!("G_{k}"), &a.graph_gk(k)?),
            GraphSelector::Hd(dd) => to_dot(&format!("H_{dd}"), &a.graph_hd(dd)?),
            GraphSelector::Gdetail { k, l, u, w } => {
                to_dot(&format!("G_{k},{l},{u},{w}"), &a.graph_g(k, l, u, w)?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors_parse() {
        assert_eq!("Gk:1".parse::<GraphSelector>(), Ok(GraphSelector::Gk(1)));
        assert_eq!("Hd:2".parse::<GraphSelector>(), Ok(GraphSelector::Hd(2)));
        assert_eq!(
            "Gdetail:1,1,1,-,2,+".parse::<GraphSelector>(),
            Ok(GraphSelector::Gdetail {
                k: 1,
                l: 1,
                u: SideRef::new(0, Side::Minus),
                w: SideRef::new(1, Side::Plus)
            })
        );
        assert!("Gx:1".parse::<GraphSelector>().is_err());
        assert!("Gdetail:1,1,0,-,2,+".parse::<GraphSelector>().is_err());
    }

    #[test]
    fn dot_lists_edges_and_clusters() {
        let mut g = CriteriaGraph::new([1, 2, 3]);
        g.add_edge(&1, &2);
        let plain = to_dot("g", &g);
        assert!(plain.contains("\"1\" -- \"2\";"));
        let part = to_dot("g", &g.with_partition(&[1].into_iter().collect()));
        assert!(part.contains("cluster_minus") && part.contains("cluster_plus"));
    }
}
