use clap::Parser;

fn main() {
    let args = specker::cli::Args::parse();
    std::process::exit(specker::cli::main_with(&args));
}
