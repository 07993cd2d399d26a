//! The minuscule heap `P_λ` and the isomorphism `φ: J(P_λ) → Λ_λ`.
//!
//! The heap is read off one maximal chain `λ ⋖ s_{i_1}λ ⋖ ... ⋖ w₀λ`: element
//! `j` carries label `i_j`, and `j < j'` is generated by every earlier/later
//! pair with non-commuting labels. Element indices follow the chain, so the
//! index order is itself a linear extension of the heap.

use serde::{Deserialize, Serialize};

use crate::bitset::{ElementSet, CAPACITY};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem, Weight};
use crate::weight_orbit::WeightLattice;

/// A down-closed set of heap elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal(ElementSet);

impl OrderIdeal {
    pub fn empty() -> Self {
        OrderIdeal(ElementSet::new())
    }

    pub fn members(&self) -> &ElementSet {
        &self.0
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.contains(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.0.iter()
    }

    /// Callers must have checked down-closure.
    pub(crate) fn from_set_unchecked(set: ElementSet) -> Self {
        OrderIdeal(set)
    }
}

#[derive(Debug, Clone)]
pub struct Heap {
    rs: RootSystem,
    lambda: Weight,
    labels: Vec<usize>,
    below: Vec<ElementSet>,
    above: Vec<ElementSet>,
    by_label: Vec<Vec<usize>>,
}

impl Heap {
    /// Builds the heap from the chain that always takes the smallest
    /// available up-cover label.
    pub fn build(lat: &WeightLattice) -> Result<Self> {
        let mut word = Vec::with_capacity(lat.height());
        let mut k = lat.bottom();
        while let Some(&(label, next)) = lat.up_covers(k).first() {
            word.push(label);
            k = next;
        }
        Self::from_word(lat.root_system(), lat.lambda(), &word)
    }

    /// Heap of the word `s_{word[n-1]} ... s_{word[0]}`, with no check that
    /// it is reduced or `λ`-minuscule.
    pub fn from_word(rs: &RootSystem, lambda: &Weight, word: &[usize]) -> Result<Self> {
        rs.check_weight(lambda)?;
        if word.len() > CAPACITY {
            return Err(Error::HeapTooLarge(word.len()));
        }
        for &i in word {
            rs.check_index(i)?;
        }
        let n = word.len();
        let mut below = vec![ElementSet::new(); n];
        for late in 0..n {
            for early in 0..late {
                if !commutes(rs, word[early], word[late]) {
                    let chain = below[early];
                    below[late] = below[late].union(&chain);
                    below[late].insert(early);
                }
            }
        }
        Ok(Self::from_relation(rs, lambda, word.to_vec(), below))
    }

    fn from_relation(rs: &RootSystem, lambda: &Weight, labels: Vec<usize>, below: Vec<ElementSet>) -> Self {
        let n = labels.len();
        let mut above = vec![ElementSet::new(); n];
        for (q, set) in below.iter().enumerate() {
            for p in set.iter() {
                above[p].insert(q);
            }
        }
        let mut by_label = vec![Vec::new(); rs.rank()];
        for (p, &l) in labels.iter().enumerate() {
            by_label[l].push(p);
        }
        Heap {
            rs: rs.clone(),
            lambda: lambda.clone(),
            labels,
            below,
            above,
            by_label,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, p: usize) -> usize {
        self.labels[p]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// `P_λ^i` in increasing index order.
    pub fn by_label(&self, i: usize) -> &[usize] {
        &self.by_label[i]
    }

    /// Strict order `p < q`.
    pub fn less_than(&self, p: usize, q: usize) -> bool {
        self.below[q].contains(p)
    }

    /// Elements strictly below `p`.
    pub fn strictly_below(&self, p: usize) -> &ElementSet {
        &self.below[p]
    }

    /// Elements strictly above `p`.
    pub fn strictly_above(&self, p: usize) -> &ElementSet {
        &self.above[p]
    }

    /// Covering pairs `(p, q)` with `p ⋖ q`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for q in 0..self.len() {
            for p in self.below[q].iter() {
                let skips = self.below[q]
                    .intersection(&self.above[p])
                    .is_empty();
                if skips {
                    out.push((p, q));
                }
            }
        }
        out.sort();
        out
    }

    pub fn full(&self) -> OrderIdeal {
        OrderIdeal(ElementSet::full(self.len()))
    }

    pub fn is_ideal(&self, set: &ElementSet) -> bool {
        self.first_gap(set).is_none()
    }

    fn first_gap(&self, set: &ElementSet) -> Option<usize> {
        set.iter().find(|&p| p >= self.len() || !self.below[p].is_subset(set))
    }

    pub fn ideal(&self, set: ElementSet) -> Result<OrderIdeal> {
        match self.first_gap(&set) {
            None => Ok(OrderIdeal(set)),
            Some(p) => Err(Error::NotAnIdeal(p)),
        }
    }

    /// The order ideal generated by `gens`.
    pub fn down_closure(&self, gens: &ElementSet) -> OrderIdeal {
        let set = gens
            .iter()
            .fold(*gens, |acc, p| acc.union(&self.below[p]));
        OrderIdeal(set)
    }

    /// Maximal elements of `ideal`.
    pub fn maximal_elements(&self, ideal: &OrderIdeal) -> ElementSet {
        ideal
            .iter()
            .filter(|&p| self.above[p].is_disjoint(ideal.members()))
            .collect()
    }

    /// Minimal elements of the complement of `ideal`.
    pub fn minimal_outside(&self, ideal: &OrderIdeal) -> ElementSet {
        (0..self.len())
            .filter(|&p| !ideal.contains(p) && self.below[p].is_subset(ideal.members()))
            .collect()
    }

    /// `φ(I)`: apply the reflections labeling the members of `I` in index
    /// order, which is a linear extension of `I`.
    pub fn phi(&self, ideal: &OrderIdeal) -> Weight {
        let mut mu = self.lambda.clone();
        for p in ideal.iter() {
            self.rs.reflect_in_place(self.labels[p], &mut mu);
        }
        mu
    }

    /// `φ(I)` computed along an explicit linear extension of `I`.
    pub fn phi_along(&self, extension: &[usize]) -> Result<Weight> {
        let mut seen = ElementSet::new();
        let mut mu = self.lambda.clone();
        for &p in extension {
            if p >= self.len() || seen.contains(p) || !self.below[p].is_subset(&seen) {
                return Err(Error::NotALinearExtension);
            }
            seen.insert(p);
            self.rs.reflect_in_place(self.labels[p], &mut mu);
        }
        Ok(mu)
    }

    /// `φ⁻¹(μ)`: walk down-covers from `μ` to `λ`, then replay the chain
    /// upward, adding at each step the next element carrying the step's
    /// label.
    pub fn phi_inverse(&self, lat: &WeightLattice, mu: &Weight) -> Result<OrderIdeal> {
        let start = lat
            .index_of(mu)
            .ok_or_else(|| Error::WeightNotFound(mu.0.clone()))?;
        let mut word = Vec::with_capacity(lat.level(start));
        let mut k = start;
        while k != lat.bottom() {
            let (label, next) = *lat
                .down_covers(k)
                .first()
                .ok_or_else(|| Error::Invariant(format!("{} has no down-cover", lat.element(k))))?;
            word.push(label);
            k = next;
        }

        let mut set = ElementSet::new();
        let mut taken = vec![0usize; self.rs.rank()];
        for &label in word.iter().rev() {
            let p = *self.by_label[label].get(taken[label]).ok_or_else(|| {
                Error::Invariant(format!("label {} exhausted while inverting {mu}", label + 1))
            })?;
            if !self.below[p].is_subset(&set) {
                return Err(Error::Invariant(format!("element {p} not addable while inverting {mu}")));
            }
            set.insert(p);
            taken[label] += 1;
        }
        Ok(OrderIdeal(set))
    }

    /// `J(P_λ)`, indexed like the lattice elements.
    pub fn ideals(&self, lat: &WeightLattice) -> Result<Vec<OrderIdeal>> {
        lat.elements()
            .iter()
            .map(|mu| self.phi_inverse(lat, mu))
            .collect()
    }

    pub fn to_export(&self) -> HeapExport {
        let ty = self.rs.cartan_type();
        HeapExport {
            family: ty.family().to_string(),
            rank: ty.rank(),
            lambda: self.lambda.clone(),
            elements: self
                .labels
                .iter()
                .enumerate()
                .map(|(index, &l)| ElementRecord { index, label: l + 1 })
                .collect(),
            covers: self.covers().into_iter().map(|(p, q)| [p, q]).collect(),
        }
    }

    /// Rebuilds a heap from its export, closing the cover list transitively.
    pub fn from_export(export: &HeapExport) -> Result<Self> {
        let family = export
            .family
            .parse()
            .map_err(Error::MalformedExport)?;
        let rs = RootSystem::new(CartanType::new(family, export.rank)?)?;
        rs.check_weight(&export.lambda)?;
        let n = export.elements.len();
        if n > CAPACITY {
            return Err(Error::HeapTooLarge(n));
        }
        let mut labels = vec![0; n];
        for (k, e) in export.elements.iter().enumerate() {
            if e.index != k {
                return Err(Error::MalformedExport(format!("element {k} has index {}", e.index)));
            }
            if e.label == 0 {
                return Err(Error::MalformedExport("labels are 1-based".into()));
            }
            rs.check_index(e.label - 1)?;
            labels[k] = e.label - 1;
        }
        let mut below = vec![ElementSet::new(); n];
        for &[p, q] in &export.covers {
            if p >= q || q >= n {
                return Err(Error::MalformedExport(format!("cover ({p}, {q}) is not forward")));
            }
        }
        for q in 0..n {
            for &[p, _] in export.covers.iter().filter(|c| c[1] == q) {
                let chain = below[p];
                below[q] = below[q].union(&chain);
                below[q].insert(p);
            }
        }
        Ok(Self::from_relation(&rs, &export.lambda, labels, below))
    }
}

/// Labeled-poset equality: same labels and same strict order.
impl PartialEq for Heap {
    fn eq(&self, other: &Self) -> bool {
        self.rs.cartan_type() == other.rs.cartan_type()
            && self.lambda == other.lambda
            && self.labels == other.labels
            && self.below == other.below
    }
}

impl Eq for Heap {}

pub(crate) fn commutes(rs: &RootSystem, i: usize, j: usize) -> bool {
    i != j && rs.cartan()[i][j] == 0
}

/// JSON shape for a heap. Labels are 1-based; `covers` lists `[p, q]` with
/// `p ⋖ q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeapExport {
    pub family: String,
    pub rank: usize,
    pub lambda: Weight,
    pub elements: Vec<ElementRecord>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub index: usize,
    pub label: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn setup(f: Family, n: usize, k: usize) -> (WeightLattice, Heap) {
        let rs = RootSystem::new(CartanType::new(f, n).unwrap()).unwrap();
        let lat = WeightLattice::generate(&rs, &rs.fundamental(k - 1)).unwrap();
        let heap = Heap::build(&lat).unwrap();
        (lat, heap)
    }

    #[test]
    fn a1_heap() {
        let (lat, heap) = setup(Family::A, 1, 1);
        assert_eq!(heap.labels(), &[0]);
        assert_eq!(heap.phi(&OrderIdeal::empty()), Weight(vec![1]));
        assert_eq!(heap.phi(&heap.full()), Weight(vec![-1]));
        assert_eq!(heap.phi_inverse(&lat, &Weight(vec![-1])).unwrap(), heap.full());
    }

    #[test]
    fn a3_middle_heap_is_a_square() {
        let (lat, heap) = setup(Family::A, 3, 2);
        assert_eq!(heap.len(), 4);
        // labels along the smallest-first chain: 2, 1, 3, 2 (1-based)
        assert_eq!(heap.labels(), &[1, 0, 2, 1]);
        assert_eq!(heap.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(!heap.less_than(1, 2) && !heap.less_than(2, 1));
        assert_eq!(heap.phi(&heap.full()), Weight(vec![0, -1, 0]));
        assert!(heap.phi(&heap.full()).is_antidominant());
        for k in lat.rank_decomposition()[2].iter().copied() {
            assert_eq!(heap.phi_inverse(&lat, lat.element(k)).unwrap().len(), 2);
        }
    }

    #[test]
    fn e7_heap_size() {
        let (lat, heap) = setup(Family::E, 7, 7);
        assert_eq!(heap.len(), 27);
        assert_eq!(heap.len(), lat.height());
    }

    #[test]
    fn phi_inverse_endpoints_and_errors() {
        let (lat, heap) = setup(Family::D, 5, 4);
        assert_eq!(heap.phi_inverse(&lat, heap.lambda()).unwrap(), OrderIdeal::empty());
        assert_eq!(heap.phi_inverse(&lat, lat.element(lat.top())).unwrap(), heap.full());
        assert!(matches!(
            heap.phi_inverse(&lat, &Weight(vec![1, 1, 0, 0, 0])),
            Err(Error::WeightNotFound(_))
        ));
    }

    #[test]
    fn ideal_validation() {
        let (_, heap) = setup(Family::A, 3, 2);
        assert!(heap.ideal(ElementSet::singleton(0)).is_ok());
        assert_eq!(heap.ideal(ElementSet::singleton(3)), Err(Error::NotAnIdeal(3)));
        assert_eq!(heap.ideal(ElementSet::singleton(9)), Err(Error::NotAnIdeal(9)));
        assert_eq!(heap.phi_along(&[1]), Err(Error::NotALinearExtension));
        assert_eq!(heap.phi_along(&[0, 0]), Err(Error::NotALinearExtension));
        assert_eq!(heap.phi_along(&[0, 2, 1]).unwrap(), heap.phi_along(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn equal_labels_form_chains() {
        for (f, n, k) in [(Family::E, 6, 1), (Family::D, 6, 6), (Family::B, 4, 4), (Family::C, 5, 1)] {
            let (_, heap) = setup(f, n, k);
            for i in 0..n {
                let class = heap.by_label(i);
                for w in class.windows(2) {
                    assert!(heap.less_than(w[0], w[1]));
                }
            }
            for (p, q) in heap.covers() {
                assert!(!commutes(heap.root_system(), heap.label(p), heap.label(q)));
            }
        }
    }

    #[test]
    fn export_round_trip() {
        let (_, heap) = setup(Family::E, 6, 6);
        let json = serde_json::to_string(&heap.to_export()).unwrap();
        let back: HeapExport = serde_json::from_str(&json).unwrap();
        assert_eq!(Heap::from_export(&back).unwrap(), heap);
    }

    #[test]
    fn malformed_exports() {
        let (_, heap) = setup(Family::A, 3, 2);
        let mut e = heap.to_export();
        e.covers.push([3, 1]);
        assert!(matches!(Heap::from_export(&e), Err(Error::MalformedExport(_))));
        let mut e = heap.to_export();
        e.elements[0].label = 0;
        assert!(matches!(Heap::from_export(&e), Err(Error::MalformedExport(_))));
        let mut e = heap.to_export();
        e.family = "G".into();
        assert!(matches!(Heap::from_export(&e), Err(Error::MalformedExport(_))));
    }
}
