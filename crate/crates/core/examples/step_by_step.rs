//! Walk through the seven construction steps one at a time.
//!
//! At small sizes the default thresholds leave every surviving vertex light,
//! so this example overrides them to make every step do visible work.

use additive_spanner::params::SpannerParams;
use additive_spanner::spanner5::{
    step0_dense_shortcut, step1_eliminate, step2_light_edges, step3_dominate_heavy, step4_trees,
    step5_build_aux, step6_dominate_paths, step7_short_paths,
};
use additive_spanner::{generate_gnm, verify_stretch, EdgeSet};

fn main() {
    let g = generate_gnm(80, 420, 3).unwrap();
    let params = SpannerParams {
        elim_threshold: Some(18.0),
        heavy_threshold: Some(9.0),
        f_threshold: Some(18.0),
        dense_shortcut: false,
        ..Default::default()
    };
    let th = params.resolve(g.vertex_count()).unwrap();
    println!("n = {}, m = {}, max degree = {}", g.vertex_count(), g.edge_count(), g.max_degree());
    println!("thresholds: elim {:.1}, heavy {:.1}, F {:.1}", th.elim, th.heavy, th.f);

    assert!(step0_dense_shortcut(&g, &th).is_none());

    let elim = step1_eliminate(&g, &th);
    let rg = &elim.residual;
    println!(
        "step 1: roots {:?}, {} tree edges, residual has {} edges, max live degree {}",
        elim.roots,
        elim.edges.len(),
        rg.live_edge_count(),
        rg.max_live_degree()
    );

    let light = step2_light_edges(rg, &th);
    println!("step 2: {} light edges", light.len());

    let (s1, attach) = step3_dominate_heavy(rg, &th).unwrap();
    println!("step 3: S1 = {s1:?} ({} attaching edges)", attach.len());

    let trees = step4_trees(rg, &s1).unwrap();
    for t in trees.iter().take(3) {
        let deepest = *t.order().last().unwrap();
        println!(
            "step 4: T_{} reaches {} vertices, f at {} = {}, s at root = {}",
            t.root,
            t.order().len(),
            deepest,
            t.f[deepest as usize],
            t.s[t.root as usize]
        );
    }

    let aux = step5_build_aux(rg, &trees, &th);
    println!("step 5: {} path segments", aux.right.len());
    for ((v, u), path) in aux.right.iter().zip(&aux.right_paths).take(3) {
        println!("        ({v}, {u}) via {path:?}");
    }

    let (s2, dominator_trees) = step6_dominate_paths(rg, &aux, &th).unwrap();
    println!("step 6: S2 = {s2:?} ({} tree edges)", dominator_trees.len());

    let short = step7_short_paths(&trees, &s1, &th);
    println!("step 7: {} short-path edges", short.len());

    let h = [&elim.edges, &light, &attach, &dominator_trees, &short]
        .into_iter()
        .fold(EdgeSet::new(), |acc, e| acc.union(e));
    let verdict = verify_stretch(&g, &h, 5, 4096).unwrap();
    println!(
        "H has {} of {} edges; max excess {:?}",
        h.len(),
        g.edge_count(),
        verdict.report.max_excess
    );
    assert!(verdict.passed);
}
