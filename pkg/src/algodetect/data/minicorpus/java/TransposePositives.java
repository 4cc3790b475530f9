public class TransposePositives {

    public static int[][] transposeRect(int[][] m) {
        int rows = m.length;
        int cols = m[0].length;
        int[][] result = new int[cols][rows];
        for (int i = 0; i < rows; i++) {
            for (int j = 0; j < cols; j++) {
                result[j][i] = m[i][j];
            }
        }
        return result;
    }

    public static void transposeSquare(int[][] m) {
        for (int i = 0; i < m.length; i++) {
            for (int j = i + 1; j < m.length; j++) {
                int temp = m[i][j];
                m[i][j] = m[j][i];
                m[j][i] = temp;
            }
        }
    }

    public static double[][] transposeNamedXY(double[][] a) {
        int width = a.length;
        int height = a[0].length;
        double[][] t = new double[height][width];
        for (int x = 0; x < width; x++) {
            for (int y = 0; y < height; y++) {
                t[y][x] = a[x][y];
            }
        }
        return t;
    }

    public static int[][] flipMatrix(int[][] a) {
        int rows = a.length;
        int cols = a[0].length;
        int[][] b = new int[cols][rows];
        for (int r = 0; r < rows; r++) {
            for (int c = 0; c < cols; c++) {
                b[c][r] = a[r][c];
            }
        }
        return b;
    }

    public static void transposeInPlace(float[][] grid) {
        int n = grid.length;
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                float temp = grid[i][j];
                grid[i][j] = grid[j][i];
                grid[j][i] = temp;
            }
        }
    }

    public static int[][] transposeWithPrint(int[][] m) {
        int rows = m.length;
        int cols = m[0].length;
        int[][] result = new int[cols][rows];
        for (int i = 0; i < rows; i++) {
            for (int j = 0; j < cols; j++) {
                result[j][i] = m[i][j];
                System.out.print(m[i][j] + " ");
            }
            System.out.println();
        }
        return result;
    }

    public static double[][] transposeDouble(double[][] matrix) {
        double[][] result = new double[matrix[0].length][matrix.length];
        for (int i = 0; i < matrix.length; i++) {
            for (int j = 0; j < matrix[0].length; j++) {
                result[j][i] = matrix[i][j];
            }
        }
        return result;
    }

    public static java.util.List<java.util.List<Integer>> transposeViaLists(
            java.util.List<java.util.List<Integer>> matrix) {
        java.util.List<java.util.List<Integer>> result =
                new java.util.ArrayList<java.util.List<Integer>>();
        int cols = matrix.get(0).size();
        for (int j = 0; j < cols; j++) {
            java.util.List<Integer> row = new java.util.ArrayList<Integer>();
            for (int i = 0; i < matrix.size(); i++) {
                row.add(matrix.get(i).get(j));
            }
            result.add(row);
        }
        return result;
    }

    public static int[][] transposeLarge(int[][] m) {
        if (m == null || m.length == 0) {
            return m;
        }
        int rows = m.length;
        int cols = m[0].length;
        int[][] result = new int[cols][rows];
        for (int i = 0; i < rows; i++) {
            if (m[i].length != cols) {
                throw new IllegalArgumentException("ragged matrix");
            }
            for (int j = 0; j < cols; j++) {
                result[j][i] = m[i][j];
            }
        }
        return result;
    }

    static char[][] pivotGrid(char[][] cells) {
        char[][] grid = new char[cells[0].length][cells.length];
        for (int r = 0; r < cells.length; r++) {
            for (int c = 0; c < cells[0].length; c++) {
                grid[c][r] = cells[r][c];
            }
        }
        return grid;
    }
}
