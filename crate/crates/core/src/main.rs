fn main() {
    std::process::exit(cegis_lab::cli::main_with_args(std::env::args_os()));
}
