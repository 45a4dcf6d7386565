# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt
