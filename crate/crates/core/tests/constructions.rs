use pilat::antichains::{extend_to_maximal_antichain, verify_antichain};
use pilat::chains::{extend_to_maximal, lift_subset_chain, verify_chain};
use pilat::complements::{complement_census, enumerate_complements};
use pilat::{keyframe_chain, Chain, ComplementCensusRow, ElementSet, LatticeUniverse, Partition};
use proptest::prelude::*;

#[test]
fn complements_meet_every_block_at_most_once() {
    for n in 1..=6 {
        for p in LatticeUniverse::enumerate(n).unwrap().iter() {
            let comps = enumerate_complements(p).unwrap();
            if n >= 2 && !p.is_bottom() && !p.is_top() {
                assert!(!comps.is_empty(), "{p} has no complement");
            }
            for q in &comps {
                for b in p.blocks() {
                    for c in q.blocks() {
                        assert!((*b & *c).len() <= 1, "{p} vs {q}");
                    }
                }
                assert!(q.join(p).unwrap().is_top());
            }
        }
    }
}

#[test]
fn census_totals_are_symmetric() {
    // Symmetric relation with no self-complementary element for n ≥ 2.
    for n in 2..=6 {
        let rows: Vec<ComplementCensusRow> = complement_census(n).unwrap();
        let sum: u64 = rows.iter().map(|r| r.total).sum();
        assert_eq!(sum % 2, 0, "n={n}");
        assert!(rows.iter().all(ComplementCensusRow::grieser_agrees));
        let bot = rows.iter().find(|r| r.partition.is_bottom()).unwrap();
        assert_eq!(bot.total, 1);
    }
}

#[test]
fn lifted_subset_chains_are_chains() {
    let sets = [
        ElementSet::range(0, 2),
        ElementSet::range(0, 4),
        ElementSet::range(0, 7),
    ];
    let chain = lift_subset_chain(&sets, 8).unwrap();
    let r = verify_chain(chain.members()).unwrap();
    assert!(r.is_chain);
    assert!(lift_subset_chain(&[ElementSet::range(0, 4), ElementSet::range(0, 2)], 8).is_err());
}

#[test]
fn keyframe_chain_passes_through_halves() {
    let c = keyframe_chain(3).unwrap();
    assert!(c.contains(&Partition::parse("0 1 2 3|4 5 6 7", 8).unwrap()));
    assert!(c.contains(&Partition::parse("0 1|2 3|4 5|6 7", 8).unwrap()));
    assert!(keyframe_chain(8).is_err());
}

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n, n).prop_map(|l| Partition::from_labels(&l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn extended_chains_are_maximal(n in 1usize..=24, seeds in prop::collection::vec(any::<u64>(), 1..5)) {
        let mut members = Vec::new();
        let mut cur = Partition::bottom(n);
        for s in seeds {
            // Deterministic coarsening: merge blocks by seed bits.
            let labels: Vec<usize> = (0..n).map(|e| {
                let b = cur.block_of(e).unwrap();
                if s >> (b % 64) & 1 == 1 { 0 } else { b + 1 }
            }).collect();
            let next = Partition::from_labels(&labels).unwrap().join(&cur).unwrap();
            if members.last() != Some(&next) {
                members.push(next.clone());
            }
            cur = next;
        }
        let ext = extend_to_maximal(&Chain::new(members.clone()).unwrap()).unwrap();
        prop_assert_eq!(ext.len(), n);
        prop_assert!(verify_chain(ext.members()).unwrap().is_maximal);
        for m in &members {
            prop_assert!(ext.contains(m));
        }
        prop_assert_eq!(extend_to_maximal(&ext).unwrap(), ext);
    }

    #[test]
    fn greedy_antichains_are_maximal(seed in prop::collection::vec(partition(5), 0..4)) {
        let mut anti: Vec<Partition> = Vec::new();
        for p in seed {
            if anti.iter().all(|q| !p.leq(q).unwrap() && !q.leq(&p).unwrap()) {
                anti.push(p);
            }
        }
        let ext = extend_to_maximal_antichain(&anti, 5).unwrap();
        prop_assert!(verify_antichain(ext.members(), 5).unwrap().is_maximal);
        for p in &anti {
            prop_assert!(ext.contains(p));
        }
    }
}
