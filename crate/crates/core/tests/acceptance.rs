//! One line per acceptance criterion, with its runtime budget.
//!
//! Set `SKEIN_STRETCH=1` to include the expensive rows 6 and 7 of the
//! fourth table in criterion 4.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use skein::verify::*;

type Checks = Box<dyn Fn(&VerifyOptions) -> Vec<CheckResult>>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: Checks,
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "table J_2(P(8,6,k)), k = 1..10",
            budget: secs(10),
            run: Box::new(|o| vec![golden_table(&TABLE_1, o)]),
        },
        Criterion {
            id: 2,
            title: "table J_2(P(k,k,2)), k = 1..10",
            budget: secs(10),
            run: Box::new(|o| vec![golden_table(&TABLE_2, o)]),
        },
        Criterion {
            id: 3,
            title: "table of P(k+2,k+4,k+1), lowest 3k+1, k = 1..7",
            budget: secs(300),
            run: Box::new(|o| vec![golden_table(&TABLE_3, o)]),
        },
        Criterion {
            id: 4,
            title: "table of P(2,5,k) with color k, lowest k+1",
            budget: secs(900),
            run: Box::new(|o| vec![golden_table(&TABLE_4, o)]),
        },
        Criterion {
            id: 5,
            title: "maximality witness J_2(P(8,6,2)) vs J_2(P(8,6,3))",
            budget: secs(5),
            run: Box::new(|o| vec![golden_table(&MAXIMALITY, o), maximality_witness(&o.limits)]),
        },
        Criterion { id: 6, title: "Temperley-Lieb identities", budget: secs(120), run: Box::new(|_| tl_identities()) },
        Criterion {
            id: 7,
            title: "minimum-degree formulas",
            budget: secs(300),
            run: Box::new(|o| {
                vec![bracket_min_degrees(&o.limits), colored_min_degrees(&o.limits), upsilon_min_degrees()]
            }),
        },
        Criterion {
            id: 8,
            title: "fused evaluator agrees with the state sums",
            budget: secs(300),
            run: Box::new(|o| vec![fused_matches_state_sum(&o.limits), fused_matches_bracket(&o.limits)]),
        },
        Criterion { id: 9, title: "stability rates", budget: secs(600), run: Box::new(|o| stability_rates(&o.limits)) },
        Criterion { id: 10, title: "degree steps, n <= 4", budget: secs(1), run: Box::new(|_| vec![degree_steps(4)]) },
    ]
}

fn main() -> ExitCode {
    let stretch = std::env::var("SKEIN_STRETCH").is_ok_and(|v| v == "1");
    let opts = VerifyOptions { stretch, ..Default::default() };
    let mut all = true;
    for c in criteria() {
        let start = Instant::now();
        let checks = (c.run)(&opts);
        let elapsed = start.elapsed();
        let in_budget = elapsed <= c.budget;
        let pass = in_budget && checks.iter().all(|r| r.pass);
        all &= pass;
        println!(
            "criterion {:>2}: {} {} ({:.2?} of {:?})",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            elapsed,
            c.budget
        );
        for r in checks.iter().filter(|r| !r.pass) {
            println!("    {r}");
        }
        if !in_budget {
            println!("    over the runtime budget");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
