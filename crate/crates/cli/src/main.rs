fn main() {
    std::process::exit(square_nodal_cli::run_cli(std::env::args_os()));
}
