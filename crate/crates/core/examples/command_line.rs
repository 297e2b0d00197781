//! The command-line frontend driven in process.

use unisecant::cli::run;

fn main() {
    for args in [
        vec!["nk", "--max", "5", "--no-cache"],
        vec!["torsion", "--k", "3"],
        vec!["unisecant", "--cubic", "fixture:weierstrass-square"],
        vec!["pencil-disc", "--cubic", "fixture:kubert9", "--point", "0,0,1"],
        vec!["selftest", "--seed", "1", "--cases", "5"],
    ] {
        let out = run(std::iter::once("unisecant").chain(args.iter().copied()));
        print!("$ unisecant {}\n[{}] {}", args.join(" "), out.code, out.stdout);
    }
}
