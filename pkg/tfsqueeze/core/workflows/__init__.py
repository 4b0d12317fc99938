# Numerical workflows for tfsqueeze
