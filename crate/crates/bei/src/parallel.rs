//! Multi-threaded drivers for the Hochster subset loop.

use bei_core::algebra::{
    initial_ideal_of_graph, BettiTable, Field, HochsterEngine, MAX_REGULARITY_VERTICES,
};
use bei_core::Graph;
use rayon::prelude::*;

use crate::Result;

const CHUNKS: u64 = 256;

fn chunks(total: u64) -> Vec<std::ops::Range<u64>> {
    let step = total.div_ceil(CHUNKS).max(1);
    (0..total)
        .step_by(step as usize)
        .map(|lo| lo..(lo + step).min(total))
        .collect()
}

fn engine(g: &Graph, field: Field) -> Result<HochsterEngine> {
    if g.n() > MAX_REGULARITY_VERTICES {
        return Err(bei_core::Error::SizeCap {
            what: "regularity",
            n: g.n(),
            cap: MAX_REGULARITY_VERTICES,
        }
        .into());
    }
    Ok(HochsterEngine::new(&initial_ideal_of_graph(g)?, field)?)
}

pub fn betti_table(g: &Graph, field: Field) -> Result<BettiTable> {
    let engine = engine(g, field)?;
    Ok(chunks(engine.subset_count())
        .into_par_iter()
        .map(|r| engine.betti_range(r))
        .reduce(BettiTable::new, |mut a, b| {
            a.merge(&b);
            a
        }))
}

pub fn regularity(g: &Graph, field: Field) -> Result<usize> {
    let engine = engine(g, field)?;
    Ok(chunks(engine.subset_count())
        .into_par_iter()
        .map(|r| engine.regularity_range(r, 0))
        .max()
        .unwrap_or(0))
}
