//! Experiment-runner binary. See `runner` in the library crate.

fn main() {
    // Placeholder during bring-up; replaced by the clap-driven runner.
    eprintln!("runner not wired yet");
    std::process::exit(2);
}
