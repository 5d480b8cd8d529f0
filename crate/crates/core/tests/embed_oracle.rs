//! The colorful embedding DP against exhaustive search over all maps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tfp_core::{embed_colorful_tree, Coloring, HostGraph, PatternTree};

fn brute_embeds(p: &PatternTree, h: &HostGraph, f: usize, d: usize, col: &Coloring) -> bool {
    let m = p.len();
    let mut map = vec![0usize; m];
    map[f] = d;
    let others: Vec<usize> = (0..m).filter(|&x| x != f).collect();
    fn go(
        i: usize,
        others: &[usize],
        map: &mut [usize],
        p: &PatternTree,
        h: &HostGraph,
        col: &Coloring,
    ) -> bool {
        if i == others.len() {
            let mut colors: Vec<u32> = map.iter().map(|&v| col.color(v)).collect();
            colors.sort_unstable();
            colors.dedup();
            return colors.len() == map.len() && p.arcs().all(|(a, b)| h.has_arc(map[a], map[b]));
        }
        for v in 0..h.num_vertices() {
            map[others[i]] = v;
            if go(i + 1, others, map, p, h, col) {
                return true;
            }
        }
        false
    }
    go(0, &others, &mut map, p, h, col)
}

#[test]
fn dp_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..1500 {
        let m = rng.random_range(1..=4);
        let parents: Vec<Option<usize>> = (0..m)
            .map(|i| (i > 0).then(|| rng.random_range(0..i)))
            .collect();
        let pattern = PatternTree::from_parents(parents).unwrap();
        let nv = rng.random_range(1..=8);
        let density = rng.random_range(0.2..0.8);
        let mut host = HostGraph::new(nv);
        for u in 0..nv {
            for v in 0..nv {
                if u != v && rng.random_bool(density) {
                    host.add_arc(u, v).unwrap();
                }
            }
        }
        let palette = rng.random_range(1..=6u32);
        let col = Coloring::new((0..nv).map(|_| rng.random_range(1..=palette)).collect()).unwrap();
        let d = rng.random_range(0..nv);

        let expected = brute_embeds(&pattern, &host, 0, d, &col);
        let got = embed_colorful_tree(&pattern, &host, 0, d, &col).unwrap();
        assert_eq!(
            got.is_some(),
            expected,
            "pattern {pattern:?} host {host:?} d={d} col={col:?}"
        );
        if let Some(e) = got {
            assert!(e.is_valid(&pattern, &host, 0, d, &col));
            yes += 1;
        } else {
            no += 1;
        }
    }
    // Both outcomes must be well represented for the comparison to mean anything.
    assert!(yes > 200 && no > 200, "yes={yes} no={no}");
}
