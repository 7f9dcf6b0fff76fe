//! Integral schemes rounded from the continuous greedy: the targeted
//! approximation and the budgeted additive-one solution.
//!
//! Only the last greedy step can be fractional, since every other step stops
//! at an integral tolerance or cap. Both algorithms floor that step and then
//! lift the union of the cheapest shore cuts of its partition by one.

use crate::graph::EdgeId;
use crate::raise::{curve, invert_curve, raise_mst, Trace};
use crate::rational::{floor_to_i128, int};
use crate::strength::PartitionCertificate;
use crate::{mst_weight, Error, Perturbation, Rational, Result, WeightedGraph};
use num_traits::{Signed, ToPrimitive};

/// How the fractional tail of the greedy was rounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundingRecord {
    /// MST increase after flooring the last step.
    pub prior_increase: u64,
    /// Budget left after flooring.
    pub residual: Rational,
    /// Increase the fractional tail delivered in the continuous solution.
    pub remaining_increase: Rational,
    /// Number of cheapest shores whose cuts were lifted.
    pub shores_lifted: usize,
    /// Union of the lifted shore cuts, sorted.
    pub lifted_union: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteSolution {
    pub perturbation: Perturbation,
    pub achieved_increase: u64,
    pub cost: u64,
    /// Continuous yardstick: the minimal fractional budget for a targeted
    /// run, the fractional optimum increase for a budgeted one.
    pub continuous_bound: Option<Rational>,
    pub rounding: Option<RoundingRecord>,
}

impl DiscreteSolution {
    pub(crate) fn from_amounts(
        g: &WeightedGraph,
        amounts: &[u64],
        continuous_bound: Option<Rational>,
        rounding: Option<RoundingRecord>,
    ) -> Result<Self> {
        let perturbation = Perturbation::from_integers(g, amounts)?;
        let increase = mst_weight(g, &perturbation) - mst_weight(g, &Perturbation::zero(g));
        let achieved_increase = to_u64(&increase)?;
        let cost = g.edges().iter().zip(amounts).map(|(e, x)| e.cost * x).sum();
        Ok(DiscreteSolution {
            perturbation,
            achieved_increase,
            cost,
            continuous_bound,
            rounding,
        })
    }
}

fn to_u64(q: &Rational) -> Result<u64> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::Internal(format!(
            "expected a non-negative integer, got {q}"
        )));
    }
    q.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Internal(format!("{q} overflows")))
}

/// Integral amounts of a trace with its last step floored, plus that step's
/// certificate and fractional part.
fn floored(trace: &Trace) -> Result<(Vec<u64>, Option<(PartitionCertificate, Rational)>)> {
    let mut amounts = trace.perturbation.amounts().to_vec();
    let mut tail = None;
    if let Some(last) = trace.steps.last() {
        let frac = last.amount - int(floor_to_i128(&last.amount));
        if frac.is_positive() {
            for &e in &last.certificate.set_s {
                amounts[e] -= frac;
            }
            tail = Some((last.certificate.clone(), frac));
        }
    }
    let amounts = amounts.iter().map(to_u64).collect::<Result<Vec<u64>>>()?;
    Ok((amounts, tail))
}

/// Shore indices by ascending cut cost, ties by smallest vertex.
fn shore_order(cert: &PartitionCertificate) -> Vec<usize> {
    let mut order: Vec<usize> = (0..cert.shores.len()).collect();
    order.sort_by_key(|&i| (cert.shore_cut_costs[i], cert.shores[i][0]));
    order
}

fn union_of(cert: &PartitionCertificate, order: &[usize], q: usize) -> Vec<EdgeId> {
    let mut union: Vec<EdgeId> = order[..q]
        .iter()
        .flat_map(|&i| cert.shore_cuts[i].iter().copied())
        .collect();
    union.sort_unstable();
    union.dedup();
    union
}

fn increase_of(g: &WeightedGraph, amounts: &[u64]) -> Result<u64> {
    let x = Perturbation::from_integers(g, amounts)?;
    to_u64(&(mst_weight(g, &x) - mst_weight(g, &Perturbation::zero(g))))
}

/// Integral scheme with increase at least `target` and cost at most
/// `2(1 - 1/n)` times the minimal fractional budget.
pub fn targeted_approx(g: &WeightedGraph, target: u64) -> Result<DiscreteSolution> {
    let budget = invert_curve(&curve(g, None), &int(target as i128))?;
    let trace = raise_mst(g, &budget);
    let (mut amounts, tail) = floored(&trace)?;
    let rounding = match tail {
        None => None,
        Some((cert, frac)) => {
            let prior = increase_of(g, &amounts)?;
            let floor_cost: u64 = g
                .edges()
                .iter()
                .zip(&amounts)
                .map(|(e, x)| e.cost * x)
                .sum();
            let remaining = frac * int(cert.coverage() as i128);
            if !remaining.is_integer() {
                return Err(Error::Internal(format!(
                    "fractional tail delivers a non-integral increase {remaining}"
                )));
            }
            let q = remaining.to_integer() as usize;
            let order = shore_order(&cert);
            let union = union_of(&cert, &order, q);
            for &e in &union {
                amounts[e] += 1;
            }
            Some(RoundingRecord {
                prior_increase: prior,
                residual: budget - int(floor_cost as i128),
                remaining_increase: remaining,
                shores_lifted: q,
                lifted_union: union,
            })
        }
    };
    let solution = DiscreteSolution::from_amounts(g, &amounts, Some(budget), rounding)?;
    if solution.achieved_increase < target {
        return Err(Error::Internal(format!(
            "rounded scheme reaches {} below the target {target}",
            solution.achieved_increase
        )));
    }
    Ok(solution)
}

/// Integral scheme of cost at most `budget` whose increase is within one of
/// half the optimum.
pub fn budgeted_approx(g: &WeightedGraph, budget: u64) -> Result<DiscreteSolution> {
    let trace = raise_mst(g, &int(budget as i128));
    let bound = Some(trace.increase);
    let (mut amounts, tail) = floored(&trace)?;
    let Some((cert, frac)) = tail else {
        return DiscreteSolution::from_amounts(g, &amounts, bound, None);
    };
    let prior = increase_of(g, &amounts)?;
    let floor_cost: u64 = g
        .edges()
        .iter()
        .zip(&amounts)
        .map(|(e, x)| e.cost * x)
        .sum();
    let residual = budget - floor_cost;
    let order = shore_order(&cert);
    // union cost only grows with q
    let q = (1..cert.shores.len())
        .take_while(|&q| g.cost_of(&union_of(&cert, &order, q)) <= residual)
        .last()
        .unwrap_or(0);
    let union = union_of(&cert, &order, q);
    for &e in &union {
        amounts[e] += 1;
    }
    let record = RoundingRecord {
        prior_increase: prior,
        residual: int(residual as i128),
        remaining_increase: frac * int(cert.coverage() as i128),
        shores_lifted: q,
        lifted_union: union,
    };
    DiscreteSolution::from_amounts(g, &amounts, bound, Some(record))
}
