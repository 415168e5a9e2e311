use clap::Parser;

fn main() {
    let args = rotsym::cli::Args::parse();
    std::process::exit(rotsym::cli::main_with_args(&args));
}
