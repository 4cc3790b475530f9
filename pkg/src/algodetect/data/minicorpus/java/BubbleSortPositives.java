public class BubbleSortPositives {

    public static void bubbleSortBasic(int[] arr) {
        for (int i = 0; i < arr.length - 1; i++) {
            for (int j = 0; j < arr.length - i - 1; j++) {
                if (arr[j] > arr[j + 1]) {
                    int temp = arr[j];
                    arr[j] = arr[j + 1];
                    arr[j + 1] = temp;
                }
            }
        }
    }

    public static void bubbleSortFlagged(int[] arr) {
        boolean swapped = true;
        int size = arr.length;
        while (swapped) {
            swapped = false;
            for (int j = 1; j < size; j++) {
                if (arr[j - 1] > arr[j]) {
                    int temp = arr[j - 1];
                    arr[j - 1] = arr[j];
                    arr[j] = temp;
                    swapped = true;
                }
            }
            size--;
        }
    }

    public static void sortDescending(int[] input) {
        for (int i = 0; i < input.length; i++) {
            for (int j = 0; j < input.length - 1 - i; j++) {
                if (input[j] < input[j + 1]) {
                    int temp = input[j];
                    input[j] = input[j + 1];
                    input[j + 1] = temp;
                }
            }
        }
    }

    public static void bubbleRecursive(int[] arr, int n) {
        if (n <= 1) {
            return;
        }
        for (int j = 0; j < n - 1; j++) {
            if (arr[j] > arr[j + 1]) {
                int temp = arr[j];
                arr[j] = arr[j + 1];
                arr[j + 1] = temp;
            }
        }
        bubbleRecursive(arr, n - 1);
    }

    static void orderValues(double[] values) {
        for (int i = 0; i < values.length; i++) {
            for (int j = 0; j < values.length - 1; j++) {
                if (values[j] > values[j + 1]) {
                    double temp = values[j];
                    values[j] = values[j + 1];
                    values[j + 1] = temp;
                }
            }
        }
    }

    public static void bubbleSortObjects(Comparable[] items) {
        for (int i = 0; i < items.length - 1; i++) {
            for (int j = 0; j < items.length - i - 1; j++) {
                if (items[j].compareTo(items[j + 1]) > 0) {
                    Comparable holder = items[j];
                    items[j] = items[j + 1];
                    items[j + 1] = holder;
                }
            }
        }
    }

    // Bubble sort keeps passing over the list until no swaps happen.
    public static int[] sortWithComments(int[] list) {
        // outer pass over the whole list
        for (int i = 0; i < list.length; i++) {
            // bubble the largest remaining element to the end
            for (int j = 0; j < list.length - i - 1; j++) {
                if (list[j] > list[j + 1]) {
                    // swap adjacent elements that are out of order
                    int temp = list[j];
                    list[j] = list[j + 1];
                    list[j + 1] = temp;
                }
            }
        }
        return list;
    }

    public static String bubbleSortEmbedded(String csv) {
        String[] parts = csv.split(",");
        int[] arr = new int[parts.length];
        for (int k = 0; k < parts.length; k++) {
            arr[k] = Integer.parseInt(parts[k].trim());
        }
        for (int i = 0; i < arr.length - 1; i++) {
            for (int j = 0; j < arr.length - i - 1; j++) {
                if (arr[j] > arr[j + 1]) {
                    int temp = arr[j];
                    arr[j] = arr[j + 1];
                    arr[j + 1] = temp;
                }
            }
        }
        StringBuilder out = new StringBuilder();
        for (int k = 0; k < arr.length; k++) {
            if (k > 0) {
                out.append(",");
            }
            out.append(arr[k]);
        }
        return out.toString();
    }

    public static void bubbleSortList(java.util.List<Integer> list) {
        int size = list.size();
        for (int i = 0; i < size - 1; i++) {
            for (int j = 0; j < size - i - 1; j++) {
                if (list.get(j) > list.get(j + 1)) {
                    int temp = list.get(j);
                    list.set(j, list.get(j + 1));
                    list.set(j + 1, temp);
                }
            }
        }
    }

    public static void bubbleSortStrings(String[] arr) {
        for (int i = 0; i < arr.length - 1; i++) {
            for (int j = 0; j < arr.length - i - 1; j++) {
                if (arr[j].compareTo(arr[j + 1]) > 0) {
                    String temp = arr[j];
                    arr[j] = arr[j + 1];
                    arr[j + 1] = temp;
                }
            }
        }
    }
}
