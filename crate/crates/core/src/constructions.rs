//! Horizontal sums: blocks glued at a shared bottom and top.

use std::collections::HashSet;

use crate::error::{PosetError, Result};
use crate::poset::{FinitePoset, UnaryMap};
use crate::set::ElementSet;

/// Glues bounded blocks (each with `0' = 1`, `1' = 0` and more than two
/// elements) at their bounds.
///
/// Element order of the result is: the shared bottom, each block's interior
/// in block and declaration order, the shared top. Bottom and top keep the
/// first block's names. An interior name already taken is suffixed with
/// `#<block index>`.
pub fn horizontal_sum(blocks: &[FinitePoset]) -> Result<FinitePoset> {
    if blocks.len() < 2 {
        return Err(PosetError::TooFewBlocks(blocks.len()));
    }
    for (i, block) in blocks.iter().enumerate() {
        if block.len() <= 2 {
            return Err(PosetError::BlockTooSmall { block: i, size: block.len() });
        }
        let bad = PosetError::BlockUnboundedOrBadUnary { block: i };
        let (bottom, top) = block.bounds().map_err(|_| bad.clone())?;
        let u = block.unary().ok_or_else(|| bad.clone())?;
        if u.apply(bottom) != top || u.apply(top) != bottom {
            return Err(bad);
        }
    }

    let (b0, t0) = blocks[0].bounds()?;
    let mut names = vec![blocks[0].name_of(b0).to_string()];
    let mut used: HashSet<String> = HashSet::from([names[0].clone(), blocks[0].name_of(t0).to_string()]);
    // per block: local index -> global index
    let mut maps: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
    let mut interior_count = 0;
    for block in blocks {
        interior_count += block.len() - 2;
    }
    let top_index = interior_count + 1;
    for (i, block) in blocks.iter().enumerate() {
        let (bottom, top) = block.bounds()?;
        let mut map = vec![0; block.len()];
        map[top] = top_index;
        for x in (0..block.len()).filter(|&x| x != bottom && x != top) {
            let mut name = block.name_of(x).to_string();
            while used.contains(&name) {
                name = format!("{name}#{i}");
            }
            used.insert(name.clone());
            map[x] = names.len();
            names.push(name);
        }
        maps.push(map);
    }
    names.push(blocks[0].name_of(t0).to_string());

    let n = names.len();
    let mut up = vec![ElementSet::empty(); n];
    let mut image = vec![0; n];
    image[0] = top_index;
    image[top_index] = 0;
    for (block, map) in blocks.iter().zip(&maps) {
        let u = block.unary().expect("checked above");
        for x in 0..block.len() {
            for y in block.up_set(x).iter() {
                up[map[x]].insert(map[y]);
            }
            image[map[x]] = map[u.apply(x)];
        }
    }
    let name = blocks.iter().map(|b| b.name()).collect::<Vec<_>>().join("+");
    FinitePoset::from_up_sets(&name, names, up)?.with_unary(UnaryMap::new(image))
}
