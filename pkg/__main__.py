from ivff_md import run_cli

run_cli()
