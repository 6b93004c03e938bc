//! Truncations of `B(∞)` from three independent constructions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{CellCrystal, Potential};
use crate::braid::{cell_to_tensor, tensor_to_cell};
use crate::crystalcore::{generate_component, graph_isomorphic, BiTensor, Closure, CrystalGraph, LabelMatch};
use crate::error::{Error, Result};
use crate::polyhedral::{sigma_membership, xi_for_support, Iota, Polyhedral};
use crate::rootdata::CartanData;

/// How the truncation is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    /// Cellular crystal cut down by `Φ̃ ≥ 0`.
    Potential,
    /// Polyhedral realization for `ι` = word followed by a cycle, kept inside `Σ_ι`.
    Polyhedral,
    /// Free tensor product of dual elementary crystals, kept inside `Φ̃ ≥ 0`.
    Tensor,
}

impl Realization {
    pub const ALL: [Realization; 3] = [Realization::Potential, Realization::Polyhedral, Realization::Tensor];

    pub fn name(self) -> &'static str {
        match self {
            Realization::Potential => "potential",
            Realization::Polyhedral => "polyhedral",
            Realization::Tensor => "tensor",
        }
    }
}

/// The depth-`d` truncation `{f̃_{i_1} ⋯ f̃_{i_k} 0 : k ≤ d}` and its elements
/// written as cellular points.
pub fn binf_truncation(
    cartan: &CartanData,
    pot: &Potential,
    realization: Realization,
    depth: usize,
) -> Result<(CrystalGraph, Vec<Vec<i64>>)> {
    let n = pot.word.len();
    match realization {
        Realization::Potential => {
            let c = CellCrystal::binf(cartan.clone(), pot)?;
            generate_component(&c, vec![0; n], depth, Closure::Lowering, &|_| true)
        }
        Realization::Polyhedral => {
            let dual = cartan.dual();
            let iota = Iota::after_word(&dual, &pot.word)?;
            let p = Polyhedral::new(dual, iota)?;
            let xi = xi_for_support(&p, n);
            if !xi.stabilized || !xi.positivity() {
                return Err(Error::Invalid(format!(
                    "Ξ for ι = {} did not stabilize with positivity",
                    p.iota
                )));
            }
            let keep = |x: &Vec<i64>| x.len() <= n && sigma_membership(&xi, x).unwrap_or(false);
            let (g, elems) = generate_component(&p, vec![], depth, Closure::Lowering, &keep)?;
            let elems = elems
                .into_iter()
                .map(|mut x| {
                    x.resize(n, 0);
                    x
                })
                .collect();
            Ok((g, elems))
        }
        Realization::Tensor => {
            let colours: Vec<usize> = pot.word.iter().rev().copied().collect();
            let t = BiTensor::new(cartan.dual(), colours)?;
            let keep = |b: &Vec<i64>| pot.member(&tensor_to_cell(b));
            let (g, elems) = generate_component(&t, cell_to_tensor(&vec![0; n]), depth, Closure::Lowering, &keep)?;
            Ok((g, elems.iter().map(|b| tensor_to_cell(b)).collect()))
        }
    }
}

/// Outcome of comparing the three truncations.
#[derive(Clone, Debug)]
pub struct TripleReport {
    pub depth: usize,
    pub sizes: [usize; 3],
    /// isomorphic with matching `wt` and `ε`: (potential, polyhedral), (potential, tensor), (polyhedral, tensor)
    pub isomorphic: [bool; 3],
    /// the three element sets coincide as cellular points
    pub same_points: bool,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.isomorphic.iter().all(|&b| b) && self.same_points
    }
}

pub fn triple_check(cartan: &CartanData, pot: &Potential, depth: usize) -> Result<TripleReport> {
    let mut graphs = Vec::new();
    let mut points = Vec::new();
    for r in Realization::ALL {
        let (g, mut e) = binf_truncation(cartan, pot, r, depth)?;
        e.sort();
        graphs.push(g);
        points.push(e);
    }
    let iso = |a: usize, b: usize| -> Result<bool> {
        Ok(graph_isomorphic(&graphs[a], &graphs[b], Some((0, 0)), LabelMatch::WtEps)?.is_some())
    };
    Ok(TripleReport {
        depth,
        sizes: [graphs[0].len(), graphs[1].len(), graphs[2].len()],
        isomorphic: [iso(0, 1)?, iso(0, 2)?, iso(1, 2)?],
        same_points: points[0] == points[1] && points[1] == points[2],
    })
}
