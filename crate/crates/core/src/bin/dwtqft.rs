fn main() {
    std::process::exit(dwtqft::cli::main_with_args(std::env::args_os()));
}
