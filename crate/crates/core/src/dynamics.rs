//! Toggles, rowmotion and rowmotion orbits.

use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::heap::{Heap, OrderIdeal};

/// `t_p`: add or remove `p` when the result is still an ideal.
pub fn toggle(heap: &Heap, ideal: &OrderIdeal, p: usize) -> OrderIdeal {
    let mut set = *ideal.members();
    if ideal.contains(p) {
        if heap.strictly_above(p).is_disjoint(&set) {
            set.remove(p);
        }
    } else if heap.strictly_below(p).is_subset(&set) {
        set.insert(p);
    }
    OrderIdeal::from_set_unchecked(set)
}

/// Whether `t_p` changes `ideal`.
pub fn is_toggleable(heap: &Heap, ideal: &OrderIdeal, p: usize) -> bool {
    toggle(heap, ideal, p) != *ideal
}

/// `t_i`: toggle every element labeled `i`, in increasing index order.
pub fn toggle_label(heap: &Heap, ideal: &OrderIdeal, i: usize) -> OrderIdeal {
    heap.by_label(i)
        .iter()
        .fold(*ideal, |acc, &p| toggle(heap, &acc, p))
}

/// Rowmotion: the ideal generated by the minimal elements of the complement.
pub fn rowmotion(heap: &Heap, ideal: &OrderIdeal) -> OrderIdeal {
    heap.down_closure(&heap.minimal_outside(ideal))
}

/// Rowmotion as a toggle sweep from the top of the heap to the bottom.
/// Heap indices form a linear extension, so the sweep runs over decreasing
/// index.
pub fn rowmotion_by_toggles(heap: &Heap, ideal: &OrderIdeal) -> OrderIdeal {
    (0..heap.len())
        .rev()
        .fold(*ideal, |acc, p| toggle(heap, &acc, p))
}

pub fn inverse_rowmotion(heap: &Heap, ideal: &OrderIdeal) -> OrderIdeal {
    (0..heap.len()).fold(*ideal, |acc, p| toggle(heap, &acc, p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    orbits: Vec<Vec<OrderIdeal>>,
    order_of_action: u64,
}

impl OrbitDecomposition {
    /// Splits `ideals` into rowmotion orbits. Each orbit starts at its
    /// smallest member (as an [`ElementSet`] value) and orbits are sorted by
    /// that member.
    pub fn new(heap: &Heap, ideals: &[OrderIdeal]) -> Result<Self> {
        let position: HashMap<OrderIdeal, usize> =
            ideals.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        if position.len() != ideals.len() {
            return Err(Error::Invariant("duplicate ideals".into()));
        }
        let mut visited = vec![false; ideals.len()];
        let mut orbits = Vec::new();
        for start in 0..ideals.len() {
            if visited[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut k = start;
            while !visited[k] {
                visited[k] = true;
                orbit.push(ideals[k]);
                let next = rowmotion(heap, &ideals[k]);
                k = *position
                    .get(&next)
                    .ok_or_else(|| Error::Invariant(format!("rowmotion left the ideal set at {next:?}")))?;
            }
            if k != start {
                return Err(Error::Invariant("rowmotion is not a permutation".into()));
            }
            let first = (0..orbit.len()).min_by_key(|&j| orbit[j]).unwrap_or(0);
            orbit.rotate_left(first);
            orbits.push(orbit);
        }
        orbits.sort_by_key(|o| o[0]);
        let order_of_action = orbits
            .iter()
            .fold(1u64, |acc, o| acc.lcm(&(o.len() as u64)));
        Ok(OrbitDecomposition { orbits, order_of_action })
    }

    pub fn orbits(&self) -> &[Vec<OrderIdeal>] {
        &self.orbits
    }

    pub fn order_of_action(&self) -> u64 {
        self.order_of_action
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn to_export(&self) -> Vec<OrbitExport> {
        let mut out: Vec<OrbitExport> = self
            .orbits
            .iter()
            .enumerate()
            .map(|(orbit_id, o)| OrbitExport {
                orbit_id,
                size: o.len(),
                ideals: o.iter().map(|i| i.iter().collect()).collect(),
            })
            .collect();
        out.sort_by(|a, b| a.size.cmp(&b.size).then(a.orbit_id.cmp(&b.orbit_id)));
        out
    }
}

/// One orbit as written by the `orbits` export: ideals are element index
/// lists, in rowmotion order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitExport {
    pub orbit_id: usize,
    pub size: usize,
    pub ideals: Vec<Vec<usize>>,
}

/// Members `p` of `ideal` that `t_p` removes: its maximal elements.
pub fn removable(heap: &Heap, ideal: &OrderIdeal) -> ElementSet {
    heap.maximal_elements(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanType, Family, RootSystem};
    use crate::weight_orbit::WeightLattice;

    fn setup(f: Family, n: usize, k: usize) -> (WeightLattice, Heap, Vec<OrderIdeal>) {
        let rs = RootSystem::new(CartanType::new(f, n).unwrap()).unwrap();
        let lat = WeightLattice::generate(&rs, &rs.fundamental(k - 1)).unwrap();
        let heap = Heap::build(&lat).unwrap();
        let ideals = heap.ideals(&lat).unwrap();
        (lat, heap, ideals)
    }

    fn set(v: &[usize]) -> OrderIdeal {
        OrderIdeal::from_set_unchecked(v.iter().copied().collect())
    }

    #[test]
    fn toggle_examples_on_square() {
        // A3 ω2: 0 < 1, 0 < 2, 1 < 3, 2 < 3
        let (_, heap, _) = setup(Family::A, 3, 2);
        let empty = OrderIdeal::empty();
        assert_eq!(toggle(&heap, &empty, 0), set(&[0]));
        assert_eq!(toggle(&heap, &empty, 3), empty);
        assert_eq!(toggle(&heap, &heap.full(), 3), set(&[0, 1, 2]));
        assert_eq!(toggle(&heap, &heap.full(), 0), heap.full());
    }

    #[test]
    fn rowmotion_examples() {
        let (_, heap, ideals) = setup(Family::A, 3, 2);
        assert_eq!(rowmotion(&heap, &OrderIdeal::empty()), set(&[0]));
        assert_eq!(rowmotion(&heap, &heap.full()), OrderIdeal::empty());
        assert_eq!(rowmotion(&heap, &set(&[0, 1])), set(&[0, 2]));
        let d = OrbitDecomposition::new(&heap, &ideals).unwrap();
        assert_eq!(d.sizes(), vec![4, 2]);
        assert_eq!(d.order_of_action(), 4);
        assert_eq!(d.orbits()[0][0], OrderIdeal::empty());
        let exported: Vec<usize> = d.to_export().iter().map(|o| o.size).collect();
        assert_eq!(exported, vec![2, 4]);
    }

    #[test]
    fn a1_single_orbit() {
        let (_, heap, ideals) = setup(Family::A, 1, 1);
        let d = OrbitDecomposition::new(&heap, &ideals).unwrap();
        assert_eq!(d.sizes(), vec![2]);
        assert_eq!(toggle_label(&heap, &OrderIdeal::empty(), 0), heap.full());
    }

    #[test]
    fn three_by_two_has_order_five() {
        let (_, heap, ideals) = setup(Family::A, 4, 2);
        let d = OrbitDecomposition::new(&heap, &ideals).unwrap();
        assert_eq!(d.order_of_action(), 5);
        assert_eq!(ideals.len(), 10);
    }

    #[test]
    fn label_toggle_fixes_when_blocked() {
        let (_, heap, _) = setup(Family::A, 3, 2);
        // element 1 is the only one labeled 1 and sits above element 0
        assert_eq!(toggle_label(&heap, &OrderIdeal::empty(), 0), OrderIdeal::empty());
    }

    #[test]
    fn sweep_and_inverse_agree() {
        let (_, heap, ideals) = setup(Family::D, 5, 1);
        for i in &ideals {
            let r = rowmotion(&heap, i);
            assert_eq!(rowmotion_by_toggles(&heap, i), r);
            assert_eq!(inverse_rowmotion(&heap, &r), *i);
            // maximal elements of Ψ(I) are the minimal elements of P ∖ I
            assert_eq!(removable(&heap, &r), heap.minimal_outside(i));
        }
    }
}
