# Numerical Semigroups Application
